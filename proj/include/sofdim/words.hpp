#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace sofdim {

using cplx = std::complex<double>;

/// A word in a finitely generated group. Letters are stored as nonzero
/// integers: +(i+1) is generator a_i, -(i+1) is its inverse.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

  static Word identity() { return Word{}; }
  static Word generator(int index, int exponent_sign = +1);
  /// a_index^power, any integer power.
  static Word power(int index, int power);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  /// Free reduction: cancel adjacent g g^{-1} pairs until none remain.
  Word reduced() const;
  bool is_reduced() const;

  Word operator*(const Word& rhs) const;  // concatenate, then reduce
  Word inverse() const;

  bool operator==(const Word& rhs) const { return letters_ == rhs.letters_; }
  bool operator!=(const Word& rhs) const { return !(*this == rhs); }

  /// Canonical order: by length, then lexicographic on letter ranks with
  /// a_i before a_i^{-1} and a_i^{±1} before a_{i+1}^{±1}.
  bool operator<(const Word& rhs) const;

  std::string str() const;  // e.g. "a.b'.a" with ' marking inverses

private:
  std::vector<int> letters_;
};

/// Rank used for the canonical lexicographic order.
int letter_rank(int letter);

/// A group given as free(n), cyclic(k), or an explicit multiplication table.
/// Table groups are validated on construction (identity, inverses,
/// associativity); they are meant for desk-scale experiments, |G| <= 64.
class GroupSpec {
public:
  enum class Kind { Free, Cyclic, Finite };

  static GroupSpec free_group(int n_generators);
  static GroupSpec cyclic(int order);
  static GroupSpec finite(std::vector<std::vector<int>> table);
  /// Text forms: "free:2", "cyclic:5", "finite:<path to table file>".
  static GroupSpec parse(const std::string& text);

  Kind kind() const { return kind_; }
  int generator_count() const;
  /// Number of elements; nullopt for free groups of rank >= 1.
  std::optional<int> order() const;

  /// Element index arithmetic for cyclic/finite groups.
  int multiply(int a, int b) const;
  int inverse_of(int a) const;
  int identity_index() const { return 0; }

  /// Fold a word over the spec's generators down to an element index
  /// (cyclic/finite only; generator i of a finite group is the element
  /// listed in generator_elements()).
  int element_of(const Word& w) const;

  const std::vector<std::vector<int>>& table() const { return table_; }
  /// Generating set used to interpret Word letters for finite groups.
  const std::vector<int>& generator_elements() const { return gen_elements_; }

  std::string str() const;

private:
  GroupSpec() = default;
  Kind kind_ = Kind::Free;
  int n_gen_ = 0;
  int order_ = 0;                            // cyclic/finite
  std::vector<std::vector<int>> table_;      // finite only
  std::vector<int> gen_elements_;            // finite only
};

/// All reduced words of length <= radius in free(n), canonical order.
/// Throws std::length_error if the ball would exceed max_words.
std::vector<Word> enumerate_ball(const GroupSpec& spec, int radius,
                                 std::size_t max_words = 50'000'000);

/// Closed-form ball size for free(n), n >= 1.
std::uint64_t ball_size(int n_generators, int radius);

/// A finite-dimensional representation: one invertible matrix per generator.
/// Uniformly bounded with the declared constant; for cyclic(k) the k-th
/// power of the generator matrix must be the identity.
class FinRep {
public:
  FinRep(GroupSpec spec, std::vector<Eigen::MatrixXcd> generator_matrices,
         double uniform_bound);

  const GroupSpec& group() const { return spec_; }
  int dimension() const { return dim_; }
  double uniform_bound() const { return bound_; }

  const Eigen::MatrixXcd& generator(int i) const { return gens_.at(i); }
  const Eigen::MatrixXcd& generator_inverse(int i) const { return inv_.at(i); }

  Eigen::MatrixXcd matrix_of(const Word& w) const;
  Eigen::VectorXcd apply(const Word& w, const Eigen::VectorXcd& v) const;

  /// Character representation of cyclic(k): x -> diag(chars) action of the
  /// generator, chars[j] = exp(2 pi i c_j / k).
  static FinRep cyclic_characters(int order, const std::vector<int>& chars);

private:
  GroupSpec spec_;
  std::vector<Eigen::MatrixXcd> gens_;
  std::vector<Eigen::MatrixXcd> inv_;
  int dim_ = 0;
  double bound_ = 1.0;
};

}  // namespace sofdim
