#include "sofdim/words.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace sofdim {

Word Word::generator(int index, int exponent_sign) {
  if (index < 0) throw std::invalid_argument("generator index must be >= 0");
  return Word{{exponent_sign >= 0 ? index + 1 : -(index + 1)}};
}

Word Word::power(int index, int power) {
  std::vector<int> ls;
  ls.reserve(static_cast<std::size_t>(std::abs(power)));
  for (int i = 0; i < std::abs(power); ++i)
    ls.push_back(power > 0 ? index + 1 : -(index + 1));
  return Word{std::move(ls)};
}

Word Word::reduced() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (int l : letters_) {
    if (l == 0) throw std::invalid_argument("zero letter");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word{std::move(out)};
}

bool Word::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i] == -letters_[i - 1]) return false;
  return true;
}

Word Word::operator*(const Word& rhs) const {
  std::vector<int> ls = letters_;
  ls.insert(ls.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word{std::move(ls)}.reduced();
}

Word Word::inverse() const {
  std::vector<int> ls(letters_.rbegin(), letters_.rend());
  for (int& l : ls) l = -l;
  return Word{std::move(ls)};
}

int letter_rank(int letter) {
  return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0);
}

bool Word::operator<(const Word& rhs) const {
  if (letters_.size() != rhs.letters_.size())
    return letters_.size() < rhs.letters_.size();
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    int a = letter_rank(letters_[i]), b = letter_rank(rhs.letters_[i]);
    if (a != b) return a < b;
  }
  return false;
}

std::string Word::str() const {
  if (letters_.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += '.';
    int g = std::abs(letters_[i]) - 1;
    if (g < 26)
      s += static_cast<char>('a' + g);
    else
      s += "g" + std::to_string(g);
    if (letters_[i] < 0) s += '\'';
  }
  return s;
}

GroupSpec GroupSpec::free_group(int n) {
  if (n < 1) throw std::invalid_argument("free group rank must be >= 1");
  GroupSpec g;
  g.kind_ = Kind::Free;
  g.n_gen_ = n;
  return g;
}

GroupSpec GroupSpec::cyclic(int order) {
  if (order < 1) throw std::invalid_argument("cyclic order must be >= 1");
  GroupSpec g;
  g.kind_ = Kind::Cyclic;
  g.n_gen_ = 1;
  g.order_ = order;
  return g;
}

GroupSpec GroupSpec::finite(std::vector<std::vector<int>> table) {
  const int k = static_cast<int>(table.size());
  if (k < 1 || k > 64)
    throw std::invalid_argument("finite group table must have 1..64 rows");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != k)
      throw std::invalid_argument("multiplication table must be square");
    for (int v : row)
      if (v < 0 || v >= k)
        throw std::invalid_argument("table entry out of range");
  }
  // identity: require element 0 to be the two-sided identity
  for (int a = 0; a < k; ++a)
    if (table[0][a] != a || table[a][0] != a)
      throw std::invalid_argument("element 0 is not an identity");
  // inverses
  for (int a = 0; a < k; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < k; ++b)
      if (table[a][b] == 0 && table[b][a] == 0) has_inverse = true;
    if (!has_inverse) throw std::invalid_argument("missing inverse");
  }
  // associativity
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw std::invalid_argument("table is not associative");

  GroupSpec g;
  g.kind_ = Kind::Finite;
  g.order_ = k;
  g.table_ = std::move(table);
  // every non-identity element doubles as a generator letter
  for (int a = 1; a < k; ++a) g.gen_elements_.push_back(a);
  if (k == 1) g.gen_elements_.push_back(0);
  g.n_gen_ = static_cast<int>(g.gen_elements_.size());
  return g;
}

GroupSpec GroupSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("group spec needs kind:arg, got '" + text + "'");
  const std::string kind = text.substr(0, colon);
  const std::string arg = text.substr(colon + 1);
  if (kind == "free") return free_group(std::stoi(arg));
  if (kind == "cyclic") return cyclic(std::stoi(arg));
  if (kind == "finite") {
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open table file '" + arg + "'");
    int k = 0;
    in >> k;
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (!(in >> table[i][j]))
          throw std::invalid_argument("truncated table file '" + arg + "'");
    return finite(std::move(table));
  }
  throw std::invalid_argument("unknown group kind '" + kind + "'");
}

int GroupSpec::generator_count() const { return n_gen_; }

std::optional<int> GroupSpec::order() const {
  if (kind_ == Kind::Free) return std::nullopt;
  return order_;
}

int GroupSpec::multiply(int a, int b) const {
  switch (kind_) {
    case Kind::Cyclic:
      return ((a + b) % order_ + order_) % order_;
    case Kind::Finite:
      return table_.at(a).at(b);
    default:
      throw std::logic_error("multiply: free groups use Word arithmetic");
  }
}

int GroupSpec::inverse_of(int a) const {
  switch (kind_) {
    case Kind::Cyclic:
      return (order_ - a % order_) % order_;
    case Kind::Finite:
      for (int b = 0; b < order_; ++b)
        if (table_[a][b] == 0) return b;
      throw std::logic_error("no inverse in validated table");
    default:
      throw std::logic_error("inverse_of: free groups use Word arithmetic");
  }
}

int GroupSpec::element_of(const Word& w) const {
  if (kind_ == Kind::Free)
    throw std::logic_error("element_of: free group elements are Words");
  int acc = 0;
  for (int l : w.letters()) {
    int gi = std::abs(l) - 1;
    int el;
    if (kind_ == Kind::Cyclic) {
      if (gi != 0) throw std::invalid_argument("cyclic group has one generator");
      el = 1 % order_;
    } else {
      el = gen_elements_.at(gi);
    }
    if (l < 0) el = inverse_of(el);
    acc = multiply(acc, el);
  }
  return acc;
}

std::string GroupSpec::str() const {
  switch (kind_) {
    case Kind::Free:
      return "free:" + std::to_string(n_gen_);
    case Kind::Cyclic:
      return "cyclic:" + std::to_string(order_);
    default:
      return "finite:" + std::to_string(order_);
  }
}

std::uint64_t ball_size(int n, int radius) {
  // 1 + sum_{l=1}^{R} 2n (2n-1)^{l-1}
  std::uint64_t total = 1, sphere = static_cast<std::uint64_t>(2 * n);
  for (int l = 1; l <= radius; ++l) {
    total += sphere;
    sphere *= static_cast<std::uint64_t>(2 * n - 1);
  }
  return total;
}

std::vector<Word> enumerate_ball(const GroupSpec& spec, int radius,
                                 std::size_t max_words) {
  if (spec.kind() != GroupSpec::Kind::Free)
    throw std::invalid_argument("enumerate_ball expects a free group spec");
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  const int n = spec.generator_count();
  if (ball_size(n, radius) > max_words)
    throw std::length_error("ball of radius " + std::to_string(radius) +
                            " exceeds the word budget");

  std::vector<Word> out{Word::identity()};
  std::vector<Word> frontier = out;
  for (int l = 1; l <= radius; ++l) {
    std::vector<Word> next;
    next.reserve(frontier.size() * static_cast<std::size_t>(2 * n));
    for (const Word& w : frontier) {
      int last = w.letters().empty() ? 0 : w.letters().back();
      // extend by every letter in rank order; skip the cancelling one
      for (int rank = 0; rank < 2 * n; ++rank) {
        int gi = rank / 2;
        int letter = (rank % 2 == 0) ? gi + 1 : -(gi + 1);
        if (letter == -last) continue;
        std::vector<int> ls = w.letters();
        ls.push_back(letter);
        next.emplace_back(std::move(ls));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;  // construction order is already (length, lex)
}

FinRep::FinRep(GroupSpec spec, std::vector<Eigen::MatrixXcd> gens, double bound)
    : spec_(std::move(spec)), gens_(std::move(gens)), bound_(bound) {
  if (gens_.empty()) throw std::invalid_argument("need generator matrices");
  dim_ = static_cast<int>(gens_[0].rows());
  for (const auto& g : gens_) {
    if (g.rows() != dim_ || g.cols() != dim_)
      throw std::invalid_argument("generator matrices must be square, equal size");
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(g);
    if (!lu.isInvertible())
      throw std::invalid_argument("generator matrix is singular");
    inv_.push_back(lu.inverse());
  }
  if (spec_.kind() == GroupSpec::Kind::Cyclic) {
    const int k = *spec_.order();
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(dim_, dim_);
    for (int i = 0; i < k; ++i) p = p * gens_[0];
    if ((p - Eigen::MatrixXcd::Identity(dim_, dim_)).norm() > 1e-8)
      throw std::invalid_argument("cyclic generator matrix^k is not identity");
  }
}

Eigen::MatrixXcd FinRep::matrix_of(const Word& w) const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim_, dim_);
  for (int l : w.letters()) {
    int gi = std::abs(l) - 1;
    m = m * (l > 0 ? gens_.at(gi) : inv_.at(gi));
  }
  return m;
}

Eigen::VectorXcd FinRep::apply(const Word& w, const Eigen::VectorXcd& v) const {
  if (v.size() != dim_)
    throw std::invalid_argument("rep_apply: dimension mismatch");
  Eigen::VectorXcd out = v;
  // right-to-left: (g1 g2 ... gk) v
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    int gi = std::abs(*it) - 1;
    out = (*it > 0 ? gens_.at(gi) : inv_.at(gi)) * out;
  }
  return out;
}

FinRep FinRep::cyclic_characters(int order, const std::vector<int>& chars) {
  const int d = static_cast<int>(chars.size());
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    double theta = 2.0 * std::numbers::pi * chars[j] / order;
    g(j, j) = cplx(std::cos(theta), std::sin(theta));
  }
  return FinRep(GroupSpec::cyclic(order), {g}, 1.0);
}

}  // namespace sofdim
