#ifndef ORBITCOVER_IO_HPP
#define ORBITCOVER_IO_HPP

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "orbitcover/compositions.hpp"
#include "orbitcover/covers.hpp"
#include "orbitcover/homology.hpp"
#include "orbitcover/nerve.hpp"
#include "orbitcover/scale_core.hpp"

namespace orbitcover {

using Json = nlohmann::ordered_json;

// Structured records. Field names are part of the file format:
//   set/scale  {"universe": N, "elements": [...]}
//   mode       {"universe": N, "elements": [...], "mode_index": i}
//   cover      {"scale": {...}, "sigma": [...], "root": x, "members": [[...], ...]}
//   complex    {"vertices": [...], "simplices_by_dim": [[[...], ...], ...]}
//   homology   {"betti": [...], "torsion": [[...], ...], "euler": z}
void to_json(Json& j, const PitchClassSet& pcs);
void to_json(Json& j, const Mode& mode);
void to_json(Json& j, const Scale& scale);
void to_json(Json& j, const IntervalComposition& sigma);
void to_json(Json& j, const Chord& chord);
void to_json(Json& j, const OrbitCover& cover);
void to_json(Json& j, const SimplicialComplex& complex);
void to_json(Json& j, const HomologyProfile& profile);

// Throw ParseError on missing or mistyped fields, DomainError on invalid
// values.
PitchClassSet pitch_class_set_from_json(const Json& j);
Mode mode_from_json(const Json& j);
IntervalComposition composition_from_json(const Json& j);
/// Rebuilds the cover from scale, sigma and root, then checks that the
/// recorded members agree.
OrbitCover orbit_cover_from_json(const Json& j);

/// "N: e1,e2,...,en", e.g. "12: 5,7,9,10,0,2,4".
PitchClassSet parse_scale(std::string_view text);

/// "(i1,i2,...,ik)"; whitespace is ignored.
IntervalComposition parse_composition(std::string_view text);

/// A cover spec "SCALE ; SIGMA [; ROOT]" or just "SIGMA [; ROOT]". Without a
/// scale the cover is taken over Z_n itself (N = n, all residues). Without
/// a root it is rooted at the tonic of mode 0.
struct CoverSpec {
  PitchClassSet scale;
  IntervalComposition sigma;
  int root;
};
CoverSpec parse_cover_spec(std::string_view text);

/// One residue per line; blank lines and '#' comments are skipped.
std::vector<int> parse_event_list(std::istream& in);

/// "[a,b,c]" with no spaces.
std::string format_list(const std::vector<int>& values);

}  // namespace orbitcover

#endif  // ORBITCOVER_IO_HPP
