#include "ballq/rep.hpp"

#include <map>

#include "ballq/error.hpp"

namespace ballq {

AffineMap eval_affine_word(const std::vector<AffineMap>& gen_maps, const Word& w) {
  AffineMap out;
  for (int letter : w.letters) {
    size_t g = size_t(letter > 0 ? letter : -letter) - 1;
    check(g < gen_maps.size(), Err::UnknownGenerator, "word letter outside the spec");
    out = compose(out, letter > 0 ? gen_maps[g] : inverse(gen_maps[g]));
  }
  return out;
}

namespace {

bool is_identity_under(const AffineMap& f, EqualityMode mode, const SurfacePtr& surface) {
  if (mode == EqualityMode::Exact) return f.is_identity();
  return f.linear_is_identity() && surface->lambda1.contains(f.t1) &&
         surface->lambda2.contains(f.t2);
}

// Maps aligned with the presentation's generator order.
std::vector<AffineMap> aligned_maps(const std::vector<std::pair<std::string, AffineMap>>& named,
                                    const Presentation& pres) {
  std::vector<AffineMap> maps;
  maps.reserve(pres.n_gens());
  for (const std::string& name : pres.generator_names) {
    bool found = false;
    for (const auto& [n, m] : named)
      if (n == name) {
        maps.push_back(m);
        found = true;
        break;
      }
    check(found, Err::BadFile, "generator '" + name + "' has no affine map");
  }
  return maps;
}

VerifyReport run_relators(const Presentation& pres, const std::vector<AffineMap>& maps,
                          EqualityMode mode, const SurfacePtr& surface) {
  check(mode == EqualityMode::Exact || surface != nullptr, Err::BadFile,
        "mod-lattice comparison needs a surface");
  VerifyReport report;
  for (const Word& r : pres.relators) {
    RelatorCheck entry;
    entry.word = to_string(r, pres);
    entry.pass = is_identity_under(eval_affine_word(maps, r), mode, surface);
    report.all_pass = report.all_pass && entry.pass;
    report.relators.push_back(std::move(entry));
  }
  return report;
}

}  // namespace

VerifyReport verify_presentation(const AffineGroupSpec& spec) {
  return run_relators(spec.presentation, aligned_maps(spec.generators, spec.presentation),
                      spec.mode, spec.surface);
}

VerifyReport verify_substitution(const Presentation& source, const AffineGroupSpec& target,
                                 const std::vector<std::pair<std::string, Word>>& images) {
  std::vector<AffineMap> target_maps = aligned_maps(target.generators, target.presentation);

  // The substituted generator maps: evaluating a source relator over these
  // equals rewriting it through the image words first.
  std::vector<AffineMap> maps;
  maps.reserve(source.n_gens());
  for (const std::string& name : source.generator_names) {
    const Word* image = nullptr;
    for (const auto& [n, w] : images)
      if (n == name) {
        image = &w;
        break;
      }
    check(image != nullptr, Err::BadFile, "source generator '" + name + "' has no image");
    maps.push_back(eval_affine_word(target_maps, *image));
  }
  return run_relators(source, maps, target.mode, target.surface);
}

int bagnera_classify(const std::vector<AffineAuto>& gens) {
  std::vector<AffineAuto> group = generate_group(gens);
  size_t n = group.size();
  std::map<Int, size_t> order_count;
  for (const AffineAuto& e : group) {
    auto ord = auto_order(e);
    check(ord.has_value(), Err::Internal, "element of a finite group lacks finite order");
    ++order_count[*ord];
  }
  auto count = [&](int k) {
    auto it = order_count.find(Int(k));
    return it == order_count.end() ? size_t(0) : it->second;
  };

  if (n == 2) return 1;
  if (n == 4 && count(2) == 3) return 2;
  if (n == 4 && count(4) == 2) return 3;
  if (n == 8 && count(4) == 4 && count(2) == 3) return 4;
  if (n == 3) return 5;
  if (n == 9 && count(9) == 0) return 6;
  if (n == 6 && count(6) > 0) return 7;
  fail(Err::NotInTable, "group of order " + std::to_string(n) +
                            " is not one of the seven bielliptic types");
}

}  // namespace ballq
