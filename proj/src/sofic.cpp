#include "sofdim/sofic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sofdim/rng.hpp"

namespace sofdim {

Perm::Perm(std::vector<int> image) : img_(std::move(image)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  return Perm(std::move(img));
}

Perm Perm::compose(const Perm& rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(img_.size());
  for (int j = 0; j < degree(); ++j) img[j] = img_[rhs.img_[j]];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(img_.size());
  for (int j = 0; j < degree(); ++j) img[img_[j]] = j;
  return Perm(std::move(img));
}

double hamming_distance(const Perm& sigma, const Perm& tau) {
  if (sigma.degree() != tau.degree())
    throw std::invalid_argument("hamming_distance: degree mismatch");
  int moved = 0;
  for (int j = 0; j < sigma.degree(); ++j)
    if (sigma(j) != tau(j)) ++moved;
  return static_cast<double>(moved) / static_cast<double>(sigma.degree());
}

SoficMap::SoficMap(GroupSpec group, int degree, Model model,
                   std::vector<Perm> generator_images, std::uint64_t seed)
    : group_(std::move(group)),
      degree_(degree),
      model_(model),
      gen_images_(std::move(generator_images)),
      seed_(seed) {
  if (degree_ < 1) throw std::invalid_argument("degree must be >= 1");
  for (const Perm& p : gen_images_)
    if (p.degree() != degree_)
      throw std::invalid_argument("generator image has wrong degree");
  if (auto k = group_.order(); k && model_ == Model::FiniteBlocks) {
    blocks_ = degree_ / *k;
    remainder_ = degree_ % *k;
  }
}

Perm SoficMap::compose_letters(const Word& w) const {
  Perm acc = Perm::identity(degree_);
  for (int l : w.reduced().letters()) {
    int gi = std::abs(l) - 1;
    const Perm& g = gen_images_.at(gi);
    acc = (l > 0 ? g : g.inverse()).compose(acc);
  }
  return acc;
}

Perm SoficMap::evaluate(const Word& w) const {
  const Word r = w.reduced();
  if (auto it = cache_.find(r.letters()); it != cache_.end()) return it->second;
  switch (model_) {
    case Model::CyclicShift: {
      long long m = 0;
      for (int l : r.letters()) m += (l > 0 ? 1 : -1);
      long long s = ((m % degree_) + degree_) % degree_;
      std::vector<int> img(degree_);
      for (int j = 0; j < degree_; ++j)
        img[j] = static_cast<int>((j + s) % degree_);
      return Perm(std::move(img));
    }
    case Model::FiniteBlocks: {
      const int k = *group_.order();
      const int el = group_.element_of(r);
      std::vector<int> img(degree_);
      for (int b = 0; b < blocks_; ++b)
        for (int g = 0; g < k; ++g)
          img[b * k + g] = b * k + group_.multiply(el, g);
      for (int a = blocks_ * k; a < degree_; ++a) img[a] = a;
      return Perm(std::move(img));
    }
    case Model::Composed:
    default:
      return compose_letters(r);
  }
}

void SoficMap::cache_product(const Word& w, Perm image) {
  if (image.degree() != degree_)
    throw std::invalid_argument("cached image has wrong degree");
  cache_[w.reduced().letters()] = std::move(image);
}

SoficMap cyclic_model(int degree) {
  SoficMap m(GroupSpec::free_group(1), degree, SoficMap::Model::CyclicShift, {});
  std::vector<Perm> gens{m.evaluate(Word::generator(0))};
  return SoficMap(GroupSpec::free_group(1), degree, SoficMap::Model::CyclicShift,
                  std::move(gens));
}

SoficMap finite_block_model(const GroupSpec& spec, int degree) {
  if (!spec.order())
    throw std::invalid_argument("finite_block_model needs a finite group");
  SoficMap probe(spec, degree, SoficMap::Model::FiniteBlocks, {});
  std::vector<Perm> gens;
  for (int i = 0; i < spec.generator_count(); ++i)
    gens.push_back(probe.evaluate(Word::generator(i)));
  return SoficMap(spec, degree, SoficMap::Model::FiniteBlocks, std::move(gens));
}

SoficMap random_perm_model(int n_generators, int degree, std::uint64_t seed) {
  if (degree < 2) throw std::invalid_argument("degree must be >= 2");
  Rng rng(seed, "random_perm_model");
  std::vector<Perm> gens;
  for (int i = 0; i < n_generators; ++i) {
    Rng stream = rng.split(static_cast<std::uint64_t>(i));
    gens.emplace_back(stream.next_permutation(degree));
  }
  return SoficMap(GroupSpec::free_group(n_generators), degree,
                  SoficMap::Model::Composed, std::move(gens), seed);
}

Eigen::MatrixXcd permutation_matrix(const Perm& sigma) {
  const int d = sigma.degree();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int j = 0; j < d; ++j) m(sigma(j), j) = 1.0;
  return m;
}

Eigen::VectorXcd apply_perm(const Perm& sigma, const Eigen::VectorXcd& f) {
  if (f.size() != sigma.degree())
    throw std::invalid_argument("apply_perm: dimension mismatch");
  Eigen::VectorXcd out(f.size());
  for (int j = 0; j < sigma.degree(); ++j) out(sigma(j)) = f(j);
  return out;
}

double lp_norm(const Eigen::VectorXcd& v, double p) {
  if (p == std::numeric_limits<double>::infinity())
    return v.cwiseAbs().maxCoeff();
  if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
  if (p == 2.0) return v.norm();
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    s += std::pow(std::abs(v(i)), p);
  return std::pow(s, 1.0 / p);
}

DefectReport defect_report(const SoficMap& sigma,
                           const std::vector<Word>& words) {
  DefectReport rep;
  rep.freeness = 1.0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Perm si = sigma.evaluate(words[i]);
    for (std::size_t j = 0; j < words.size(); ++j) {
      const Perm sj = sigma.evaluate(words[j]);
      const Perm prod = sigma.evaluate(words[i] * words[j]);
      rep.multiplicativity =
          std::max(rep.multiplicativity, hamming_distance(prod, si.compose(sj)));
      if (words[i].reduced() != words[j].reduced())
        rep.freeness = std::min(rep.freeness, hamming_distance(si, sj));
      ++rep.pairs_checked;
    }
  }
  return rep;
}

}  // namespace sofdim
