#include "orbitcover/io.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "orbitcover/errors.hpp"

namespace orbitcover {

void to_json(Json& j, const PitchClassSet& pcs) {
  j = Json{{"universe", pcs.universe()}, {"elements", pcs.elements()}};
}

void to_json(Json& j, const Mode& mode) {
  j = Json{{"universe", mode.base().universe()},
           {"elements", mode.base().elements()},
           {"mode_index", mode.mode_index()}};
}

void to_json(Json& j, const Scale& scale) { to_json(j, scale.base()); }

void to_json(Json& j, const IntervalComposition& sigma) { j = sigma.parts(); }

void to_json(Json& j, const Chord& chord) { j = chord.elements(); }

void to_json(Json& j, const OrbitCover& cover) {
  Json members = Json::array();
  for (const auto& m : cover.members()) members.push_back(m);
  j = Json{{"scale", cover.scale()},
           {"sigma", cover.sigma()},
           {"root", cover.root()},
           {"members", std::move(members)}};
}

void to_json(Json& j, const SimplicialComplex& complex) {
  j = Json{{"vertices", complex.vertex_labels()}, {"simplices_by_dim", complex.simplices_by_dim()}};
}

void to_json(Json& j, const HomologyProfile& profile) {
  j = Json{{"betti", profile.betti},
           {"torsion", profile.torsion},
           {"euler", profile.euler_characteristic}};
}

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ParseError(std::string("record is missing field \"") + name + "\"");
  }
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const Json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) throw ParseError(std::string(what) + " must be an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view text, std::string_view context) {
  text = trim(text);
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("expected an integer in " + std::string(context) + ", got \"" +
                     std::string(text) + "\"");
  }
  return value;
}

std::vector<int> parse_int_list(std::string_view text, std::string_view context) {
  std::vector<int> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma - start), context));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t at = text.find(sep, start);
    out.push_back(text.substr(start, at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

}  // namespace

PitchClassSet pitch_class_set_from_json(const Json& j) {
  return PitchClassSet(int_field(j, "universe"), int_list(field(j, "elements"), "elements"));
}

Mode mode_from_json(const Json& j) {
  return Mode(pitch_class_set_from_json(j), int_field(j, "mode_index"));
}

IntervalComposition composition_from_json(const Json& j) {
  return IntervalComposition(int_list(j, "sigma"));
}

OrbitCover orbit_cover_from_json(const Json& j) {
  OrbitCover cover(Scale(pitch_class_set_from_json(field(j, "scale"))),
                   composition_from_json(field(j, "sigma")), int_field(j, "root"));
  if (j.contains("members")) {
    const Json& members = j.at("members");
    if (!members.is_array() || members.size() != cover.members().size()) {
      throw ParseError("recorded members do not match the cover");
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (Chord(int_list(members[i], "members")) != cover.members()[i]) {
        throw ParseError("recorded member " + std::to_string(i) + " does not match the cover");
      }
    }
  }
  return cover;
}

PitchClassSet parse_scale(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("scale must look like \"N: e1,e2,...\", got \"" + std::string(text) + "\"");
  }
  const int universe = parse_int(text.substr(0, colon), "scale universe");
  auto elements = parse_int_list(text.substr(colon + 1), "scale elements");
  if (elements.empty()) throw ParseError("scale has no elements");
  return PitchClassSet(universe, std::move(elements));
}

IntervalComposition parse_composition(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw ParseError("composition must look like \"(i1,...,ik)\", got \"" + std::string(text) + "\"");
  }
  auto parts = parse_int_list(text.substr(1, text.size() - 2), "composition");
  if (parts.empty()) throw ParseError("composition has no parts");
  return IntervalComposition(std::move(parts));
}

CoverSpec parse_cover_spec(std::string_view text) {
  auto pieces = split(text, ';');
  for (auto& p : pieces) p = trim(p);
  if (pieces.empty() || pieces.size() > 3) {
    throw ParseError("cover spec must be \"[SCALE ;] SIGMA [; ROOT]\", got \"" + std::string(text) + "\"");
  }

  std::size_t next = 0;
  std::optional<PitchClassSet> scale;
  if (pieces[0].find(':') != std::string_view::npos) scale = parse_scale(pieces[next++]);
  if (next >= pieces.size()) throw ParseError("cover spec has no composition");
  IntervalComposition sigma = parse_composition(pieces[next++]);
  std::optional<int> root;
  if (next < pieces.size()) root = parse_int(pieces[next++], "cover root");
  if (next != pieces.size()) throw ParseError("trailing fields in cover spec");

  if (!scale) {
    std::vector<int> all(sigma.n());
    for (int r = 0; r < sigma.n(); ++r) all[r] = r;
    scale.emplace(sigma.n(), std::move(all));
  }
  const int chosen_root = root.value_or(scale->normal_order().front());
  return CoverSpec{std::move(*scale), std::move(sigma), chosen_root};
}

std::vector<int> parse_event_list(std::istream& in) {
  std::vector<int> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    out.push_back(parse_int(view, "event list line " + std::to_string(line_no)));
  }
  return out;
}

std::string format_list(const std::vector<int>& values) {
  std::string out = "[";
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(values[j]);
  }
  return out + "]";
}

}  // namespace orbitcover
