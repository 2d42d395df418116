#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "sofdim/words.hpp"

namespace sofdim {

/// A permutation of {0, ..., d-1} stored as an image array.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> image);
  static Perm identity(int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int j) const { return img_[j]; }
  const std::vector<int>& image() const { return img_; }

  Perm compose(const Perm& rhs) const;  // (this ∘ rhs)(j) = this(rhs(j))
  Perm inverse() const;
  bool operator==(const Perm& rhs) const { return img_ == rhs.img_; }

private:
  std::vector<int> img_;
};

/// Normalized Hamming distance: fraction of points where the permutations
/// disagree.
double hamming_distance(const Perm& sigma, const Perm& tau);

/// Multiplicativity and freeness statistics over a requested word family.
struct DefectReport {
  double multiplicativity = 0.0;  // max_(g,h) d_Hamm(sigma(gh), sigma(g)sigma(h))
  double freeness = 1.0;          // min_{g != h} d_Hamm(sigma(g), sigma(h))
  int pairs_checked = 0;
};

/// A finite model sigma: Gamma -> S_d. Generator images are always stored;
/// other elements evaluate through the model rule (cyclic shift, block
/// action, or letterwise composition). Cached product images, when present,
/// take precedence so that a genuine multiplicativity gap can be probed.
class SoficMap {
public:
  enum class Model { Composed, CyclicShift, FiniteBlocks };

  SoficMap(GroupSpec group, int degree, Model model,
           std::vector<Perm> generator_images, std::uint64_t seed = 0);

  const GroupSpec& group() const { return group_; }
  int degree() const { return degree_; }
  Model model() const { return model_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<Perm>& generator_images() const { return gen_images_; }

  /// Image of a word: cached image if stored, else the model rule.
  Perm evaluate(const Word& w) const;
  /// Image by composing generator images along the reduced word.
  Perm compose_letters(const Word& w) const;

  void cache_product(const Word& w, Perm image);

  /// d = q|Gamma| + r bookkeeping for the block model.
  int block_count() const { return blocks_; }
  int remainder() const { return remainder_; }

private:
  GroupSpec group_;
  int degree_ = 0;
  Model model_ = Model::Composed;
  std::vector<Perm> gen_images_;
  std::map<std::vector<int>, Perm> cache_;
  std::uint64_t seed_ = 0;
  int blocks_ = 0, remainder_ = 0;
};

/// Exact model for Z: m acts as the shift j -> j + m (mod d).
SoficMap cyclic_model(int degree);

/// Block model for a finite group: d = q|G| + r, left multiplication on q
/// regular blocks, the remaining r points fixed.
SoficMap finite_block_model(const GroupSpec& spec, int degree);

/// Independent uniform generator permutations for free(n); words evaluate by
/// composition. Deterministic given the seed.
SoficMap random_perm_model(int n_generators, int degree, std::uint64_t seed);

/// The isometry f -> f ∘ sigma^{-1} of l^p(d) as a permutation matrix.
Eigen::MatrixXcd permutation_matrix(const Perm& sigma);
Eigen::VectorXcd apply_perm(const Perm& sigma, const Eigen::VectorXcd& f);

/// Entrywise l^p norms on C^d (p >= 1, p = inf supported via p <= 0 sentinel
/// in the callers; here p must be finite or infinity()).
double lp_norm(const Eigen::VectorXcd& v, double p);

/// Defect statistics over all ordered pairs from `words`.
DefectReport defect_report(const SoficMap& sigma, const std::vector<Word>& words);

}  // namespace sofdim
