#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ballq/ledger.hpp"
#include "ballq/perm.hpp"
#include "ballq/rep.hpp"
#include "ballq/torus.hpp"
#include "ballq/word.hpp"

namespace ballq {

// Whole file as text. Err::MissingFixture ("missing fixture <basename>")
// when the file does not exist or cannot be read.
std::string read_text_file(const std::string& path);

// Comma split at paren/bracket depth 0 (commutators and point ids keep
// their commas), entries trimmed, empty entries dropped.
std::vector<std::string> split_word_list(const std::string& text);

// Arrangement files (.arr), line-oriented, '#' starts a comment:
//   surface lambda1=<g>,<g> lambda2=<g>,<g>
//   line <name> a=<gi> b=<gi> c=<g>
//   auto <name> m=<g>,<g>,<g>,<g> t=<g>,<g>     (linear part row-major)
//   group <name> = <auto names...>
// <g> / <gi> use the gaussian literal grammar; the surface line must come
// before any line. Geometric duplicates (same canonical line) are rejected.
// Err::Syntax diagnostics carry path:line:column.
Arrangement read_arrangement(const std::string& path);

// Presentation files (.grp): the `gens ... ; rels ...` grammar, newlines
// allowed anywhere whitespace is; diagnostics carry the path.
Presentation read_presentation(const std::string& path);

// Ledger files (.ledger), line-oriented, '#' comments:
//   base abelian|bielliptic:<n>|explicit:<K2>,<e>
//   blow <point-id>
//   curve <name> selfint=<int> genus=elliptic|rational [mults=<id>:<m>,...]
//   boundary <names...>
//   pair <name> <name> = <int>     (optional base intersection numbers)
// Point ids may contain spaces inside (...) groups; selfint is the value
// after the listed blowups (the proper transform). Without pair lines the
// ledger cannot feed the disjointness gate, only the raw Chern arithmetic.
BlowupLedger read_ledger(const std::string& path);

// Affine realization files (.affine), line-oriented, '#' comments:
//   presentation <file.grp>        (resolved relative to this file)
//   mode exact|modlattice
//   affine <name> m=<g>,<g>,<g>,<g> t=<g>,<g>
//   surface lambda1=<g>,<g> lambda2=<g>,<g>    (required for modlattice)
AffineGroupSpec read_affine_spec(const std::string& path);

// Permutation image files (.fix), line-oriented, '#' comments:
//   degree <n>
//   perm <name> = <k0>,<k1>,...    (image table over 0..n-1)
//   stabilizer <word>, <word>, ... (optional: generating words of a
//                                   subgroup, parsed later by the caller
//                                   against the ambient presentation)
struct PermFixture {
  int degree = 0;
  std::vector<std::pair<std::string, Perm>> images;  // file order
  std::vector<std::string> stabilizer;               // unparsed word texts
};
PermFixture read_perm_fixture(const std::string& path);

// Fixture images reordered to the presentation's generator order.
// Err::BadFile on unknown, duplicate, or missing generator names.
std::vector<Perm> ordered_images(const PermFixture& fix, const Presentation& pres);

// Pipeline files (.pipeline): a quotient-and-blowup recipe, '#' comments:
//   arrangement <file.arr>         (resolved relative to this file)
//   quotient <group-name>          (optional; absent = trivial group)
//   base abelian|bielliptic:<n>|explicit:<K2>,<e>
//   rename <names,comma-separated> (optional; image curves in order)
struct PipelineSpec {
  std::string arrangement_path;  // resolved
  std::string group;             // empty = trivial
  BaseSurface base;
  std::vector<std::string> rename;
};
PipelineSpec read_pipeline(const std::string& path);

// The named group of the arrangement, generated to closure.
std::vector<AffineAuto> arrangement_group(const Arrangement& arr, const std::string& name);

// Quotient configuration / blown-up ledger of a pipeline (every singular
// point of the configuration is blown).
QuotientConfig pipeline_config(const PipelineSpec& spec);
BlowupLedger pipeline_ledger(const PipelineSpec& spec);

}  // namespace ballq
