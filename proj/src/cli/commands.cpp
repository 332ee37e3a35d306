#include "orbitcover/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "orbitcover/errors.hpp"
#include "orbitcover/isomorphism.hpp"
#include "orbitcover/modular.hpp"

namespace orbitcover::cli {

namespace {

template <typename T>
std::string tuple_text(const std::vector<T>& values) {
  std::string out = "(";
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(values[j]);
  }
  return out + ")";
}

std::string torsion_text(const HomologyProfile& h) {
  if (!h.has_torsion()) return "none";
  std::string out;
  for (std::size_t p = 0; p < h.torsion.size(); ++p) {
    for (auto d : h.torsion[p]) {
      if (!out.empty()) out += ", ";
      out += "Z/" + std::to_string(d) + " in H_" + std::to_string(p);
    }
  }
  return out;
}

std::string scale_text(const PitchClassSet& pcs) {
  std::string out = std::to_string(pcs.universe()) + ": ";
  const auto order = pcs.normal_order();
  for (std::size_t j = 0; j < order.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(order[j]);
  }
  return out;
}

std::string class_members_text(const RotationClass& c) {
  std::string out = "{";
  for (std::size_t j = 0; j < c.members.size(); ++j) {
    if (j) out += ',';
    out += c.members[j].to_string();
  }
  return out + "}";
}

Json nerve_summary(const SimplicialComplex& complex, const HomologyProfile& h) {
  return Json{{"f_vector", complex.f_vector()},
              {"betti", h.betti},
              {"torsion", h.torsion},
              {"euler", h.euler_characteristic}};
}

std::string nerve_summary_text(const SimplicialComplex& complex, const HomologyProfile& h) {
  return "f-vector " + tuple_text(complex.f_vector()) + ", betti " + tuple_text(h.betti) +
         ", torsion " + torsion_text(h) + ", euler " + std::to_string(h.euler_characteristic);
}

// The cover of Z_n (N = n, all residues) by translates of sigma, rooted at 0.
OrbitCover chromatic_cover(const IntervalComposition& sigma) {
  std::vector<int> all(sigma.n());
  std::iota(all.begin(), all.end(), 0);
  return OrbitCover(Scale(PitchClassSet(sigma.n(), std::move(all))), sigma, 0);
}

}  // namespace

std::string_view version() { return ORBITCOVER_VERSION; }

std::string render(const Report& report, OutputFormat format, int width) {
  if (format == OutputFormat::kJson) {
    Json doc{{"tool", "orbitcover"},
             {"version", std::string(version())},
             {"command", report.command},
             {"parameters", report.parameters},
             {"results", report.results}};
    return doc.dump(2) + "\n";
  }
  const std::string rule(static_cast<std::size_t>(std::max(width, 8)), '-');
  std::ostringstream out;
  out << "orbitcover " << version() << " | " << report.command << '\n' << rule << '\n';
  for (const auto& line : report.lines) out << line << '\n';
  out << rule << '\n';
  return out.str();
}

Report cmd_classify(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw DomainError("classify needs 1 <= k <= n, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
  if (n > kMaxClassifyN) {
    throw DomainError("classify supports n <= " + std::to_string(kMaxClassifyN));
  }
  Report report;
  report.command = "classify " + std::to_string(n) + " " + std::to_string(k);
  report.parameters = Json{{"n", n}, {"k", k}};

  const auto compositions = enumerate_compositions(n, k);
  const auto classes = rotation_classes(n, k);
  const auto orbits = affine_orbits(n, k);
  const bool primitive = std::gcd(n, k) == 1;

  Json class_list = Json::array();
  for (const auto& c : classes) {
    Json members = Json::array();
    for (const auto& m : c.members) members.push_back(m);
    class_list.push_back(Json{{"representative", c.representative}, {"members", std::move(members)}});
  }

  auto& lines = report.lines;
  lines.push_back("Sigma(" + std::to_string(n) + "," + std::to_string(k) + ")" +
                  (primitive ? "" : "  [non-primitive: gcd(n,k) > 1]"));
  lines.push_back("compositions: " + std::to_string(compositions.size()));
  lines.push_back("rotation classes: " + std::to_string(classes.size()));
  for (const auto& c : classes) lines.push_back("  " + c.to_string() + " = " + class_members_text(c));
  lines.push_back("affine orbits: " + std::to_string(orbits.size()));

  Json orbit_list = Json::array();
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    const auto& orbit = orbits[o];
    Json reps = Json::array();
    std::string reps_text;
    for (const auto& c : orbit.classes) {
      reps.push_back(c.representative);
      if (!reps_text.empty()) reps_text += ",";
      reps_text += c.to_string();
    }
    Json witnesses = Json::array();
    for (const auto& w : orbit.witnesses) {
      witnesses.push_back(Json{{"from", w.from}, {"to", w.to}, {"unit", w.unit}});
    }
    const OrbitCover cover = chromatic_cover(orbit.classes.front().representative);
    const SimplicialComplex complex = build_nerve(cover);
    const HomologyProfile h = homology(complex);
    orbit_list.push_back(Json{{"classes", std::move(reps)},
                              {"witnesses", std::move(witnesses)},
                              {"nerve", nerve_summary(complex, h)}});

    lines.push_back("  O" + std::to_string(o + 1) + " = {" + reps_text + "}");
    for (const auto& w : orbit.witnesses) {
      lines.push_back("    u=" + std::to_string(w.unit) + ": " + w.from.to_string() + " -> [" +
                      w.to.to_string() + "]");
    }
    lines.push_back("    nerve: " + nerve_summary_text(complex, h));
  }

  Json comp_list = Json::array();
  for (const auto& c : compositions) comp_list.push_back(c);
  report.results = Json{{"primitive", primitive},
                        {"composition_count", compositions.size()},
                        {"compositions", std::move(comp_list)},
                        {"rotation_class_count", classes.size()},
                        {"rotation_classes", std::move(class_list)},
                        {"affine_orbit_count", orbits.size()},
                        {"affine_orbits", std::move(orbit_list)}};
  return report;
}

Report cmd_nerve(const NerveArgs& args) {
  const PitchClassSet pcs = parse_scale(args.scale);
  const IntervalComposition sigma = parse_composition(args.sigma);
  const Mode mode(pcs, args.mode_index);
  const int root = args.root.value_or(mode.tonic());
  const OrbitCover cover(Scale(mode), sigma, root);
  const SimplicialComplex complex = build_nerve(cover);
  const HomologyProfile h = homology(complex);

  Report report;
  report.command = "nerve \"" + args.scale + "\" \"" + args.sigma + "\" " + std::to_string(root);
  report.parameters = Json{{"scale", pcs}, {"sigma", sigma}, {"root", root}, {"mode_index", args.mode_index}};

  auto& lines = report.lines;
  lines.push_back("scale " + scale_text(pcs) + "  (normal order)");
  lines.push_back("cover " + sigma.to_string() + " rooted at " + std::to_string(root) +
                  (cover.is_primitive() ? ", primitive" : ", not primitive"));
  lines.push_back("members:");
  for (std::size_t i = 0; i < cover.members().size(); ++i) {
    lines.push_back("  " + std::to_string(i) + ": " + cover.members()[i].to_string());
  }
  lines.push_back("distinct members: " + std::to_string(cover.distinct_members().size()));
  lines.push_back("f-vector: " + tuple_text(complex.f_vector()));
  lines.push_back("betti: " + tuple_text(h.betti));
  lines.push_back("torsion: " + torsion_text(h));
  lines.push_back("euler characteristic: " + std::to_string(h.euler_characteristic));

  Json regions = nullptr;
  if (cover.is_primitive()) {
    regions = Json::array();
    lines.push_back("harmonic regions:");
    const Scale& scale = cover.scale();
    const HarmonicRegions table = harmonic_regions(cover);
    for (int step = 0; step < scale.size(); ++step) {
      const int x = scale.translate(step, root);
      const auto& simplex = table.at(x);
      regions.push_back(Json{{"element", x}, {"simplex", simplex}});
      lines.push_back("  " + std::to_string(x) + ": " + tuple_text(simplex));
    }
  } else {
    lines.push_back("harmonic regions: n/a (cover is not primitive)");
  }

  report.results = Json{{"cover", cover},
                        {"primitive", cover.is_primitive()},
                        {"distinct_member_count", cover.distinct_members().size()},
                        {"complex", complex},
                        {"f_vector", complex.f_vector()},
                        {"homology", h},
                        {"harmonic_regions", std::move(regions)}};
  return report;
}

Report cmd_transport(const TransportArgs& args) {
  const PitchClassSet source_pcs = parse_scale(args.source);
  const PitchClassSet target_pcs = parse_scale(args.target);
  const IntervalComposition sigma = parse_composition(args.sigma);

  std::optional<std::vector<int>> sequence;
  if (args.sequence_path) {
    std::ifstream in(*args.sequence_path);
    if (!in) throw ParseError("cannot read event list " + *args.sequence_path);
    sequence = parse_event_list(in);
  }

  const Mode mode(source_pcs, args.mode_index);
  const int root = args.root.value_or(mode.tonic());
  const OrbitCover cover(Scale(mode), sigma, root);
  const Scale target(target_pcs);
  const auto moved = transport_cover(cover, args.u, args.v, target, args.target_origin);
  const int n = cover.scale().size();
  const int origin = args.target_origin.value_or(target_pcs.normal_order().front());

  Report report;
  report.command = "transport \"" + args.source + "\" \"" + args.sigma + "\" " +
                   std::to_string(args.u) + " " + std::to_string(args.v) + " \"" + args.target + "\"";
  report.parameters = Json{{"source", source_pcs},
                           {"sigma", sigma},
                           {"u", args.u},
                           {"v", args.v},
                           {"target", target_pcs},
                           {"root", root},
                           {"target_origin", origin},
                           {"sequence_file", args.sequence_path ? Json(*args.sequence_path) : Json(nullptr)}};

  auto& lines = report.lines;
  lines.push_back("f(x) = " + std::to_string(mod(args.u, n)) + "*d(x) + " + std::to_string(mod(args.v, n)) +
                  "  (d counts steps from " + std::to_string(root) + "; target degrees from " +
                  std::to_string(origin) + ")");
  lines.push_back("sigma " + sigma.to_string() + " -> " + moved.cover.sigma().to_string());
  lines.push_back("pointwise correspondence:");
  Json pointwise = Json::array();
  for (int step = 0; step < n; ++step) {
    const int x = cover.scale().translate(step, root);
    pointwise.push_back(Json{{"from", x}, {"to", moved.pointwise(x)}});
    lines.push_back("  " + std::to_string(x) + " -> " + std::to_string(moved.pointwise(x)));
  }

  lines.push_back("member correspondence:");
  Json members = Json::array();
  for (int i = 0; i < n; ++i) {
    const int j = moved.index_map[i];
    members.push_back(Json{{"index", i},
                           {"chord", cover.members()[i]},
                           {"target_index", j},
                           {"image", moved.cover.members()[j]}});
    lines.push_back("  " + std::to_string(i) + " " + cover.members()[i].to_string() + " -> " +
                    std::to_string(j) + " " + moved.cover.members()[j].to_string());
  }
  const bool verified = verify_cover_morphism(moved.morphism(), cover, moved.cover);
  lines.push_back(std::string("cover morphism verified: ") + (verified ? "yes" : "no"));

  Json sequence_json = nullptr;
  if (sequence) {
    std::vector<int> image;
    image.reserve(sequence->size());
    for (int x : *sequence) {
      if (!source_pcs.contains(x)) {
        throw MembershipError("event " + std::to_string(x) + " is not in the source scale");
      }
      image.push_back(moved.pointwise(x));
    }
    lines.push_back("sequence: " + format_list(*sequence) + " -> " + format_list(image));
    sequence_json = Json{{"input", *sequence}, {"output", image}};
  }

  report.results = Json{{"sigma_image", moved.cover.sigma()},
                        {"pointwise", std::move(pointwise)},
                        {"source_cover", cover},
                        {"target_cover", moved.cover},
                        {"members", std::move(members)},
                        {"morphism_verified", verified},
                        {"sequence", std::move(sequence_json)}};
  return report;
}

Report cmd_isocheck(const std::string& spec_a, const std::string& spec_b) {
  const CoverSpec a = parse_cover_spec(spec_a);
  const CoverSpec b = parse_cover_spec(spec_b);
  const OrbitCover cover_a(Scale(a.scale), a.sigma, a.root);
  const OrbitCover cover_b(Scale(b.scale), b.sigma, b.root);
  const SimplicialComplex nerve_a = build_nerve(cover_a);
  const SimplicialComplex nerve_b = build_nerve(cover_b);
  const auto witness = nerve_isomorphic(nerve_a, nerve_b);

  const bool applicable = a.sigma.n() == b.sigma.n() && a.sigma.k() == b.sigma.k() &&
                          cover_a.is_primitive() && cover_b.is_primitive();
  const auto unit = relating_unit(a.sigma, b.sigma);

  Report report;
  report.command = "isocheck \"" + spec_a + "\" \"" + spec_b + "\"";
  report.parameters = Json{{"a", spec_a}, {"b", spec_b}};

  auto describe = [](const OrbitCover& c, const SimplicialComplex& complex) {
    return Json{{"cover", c}, {"primitive", c.is_primitive()}, {"f_vector", complex.f_vector()}};
  };

  auto& lines = report.lines;
  lines.push_back("A: " + a.sigma.to_string() + " over " + scale_text(a.scale) + ", root " +
                  std::to_string(a.root) + ", f-vector " + tuple_text(nerve_a.f_vector()));
  lines.push_back("B: " + b.sigma.to_string() + " over " + scale_text(b.scale) + ", root " +
                  std::to_string(b.root) + ", f-vector " + tuple_text(nerve_b.f_vector()));
  lines.push_back(std::string("nerve isomorphism: ") + (witness ? "yes" : "no"));

  Json witness_json = nullptr;
  if (witness) {
    witness_json = Json::array();
    std::string text;
    for (int v = 0; v < nerve_a.vertex_count(); ++v) {
      const int from = nerve_a.vertex_labels()[v];
      const int to = nerve_b.vertex_labels()[(*witness)[v]];
      witness_json.push_back(Json{{"from", from}, {"to", to}});
      if (!text.empty()) text += ", ";
      text += std::to_string(from) + "->" + std::to_string(to);
    }
    lines.push_back("witness (member index): " + text);
  }

  Json affine{{"applicable", applicable},
              {"related", unit.has_value()},
              {"unit", unit ? Json(*unit) : Json(nullptr)}};
  if (!applicable) {
    lines.push_back("affine criterion: n/a (needs primitive covers of equal n and k)");
  } else if (unit) {
    lines.push_back("affine criterion: related by u=" + std::to_string(*unit));
  } else {
    lines.push_back("affine criterion: not related");
  }
  const bool agree = !applicable || unit.has_value() == witness.has_value();
  if (applicable) lines.push_back(std::string("methods agree: ") + (agree ? "yes" : "NO"));

  report.results = Json{{"a", describe(cover_a, nerve_a)},
                        {"b", describe(cover_b, nerve_b)},
                        {"isomorphic", witness.has_value()},
                        {"witness", std::move(witness_json)},
                        {"affine", std::move(affine)},
                        {"agree", agree}};
  return report;
}

}  // namespace orbitcover::cli
