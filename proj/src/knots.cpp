#include "knotcalc/knots.hpp"

#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "knotcalc/intmat.hpp"

namespace knotcalc {

SeifertMatrix::SeifertMatrix(std::vector<std::vector<long long>> entries)
    : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  for (const auto& row : entries_)
    if (row.size() != n) throw InvalidKnot("Seifert matrix must be square");
  IntMatrix skew(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      skew[i][j] = BigInt(entries_[i][j]) - BigInt(entries_[j][i]);
  const BigInt d = mat_det(std::move(skew));
  if (d != 1 && d != -1)
    throw InvalidKnot("not a Seifert pairing: det(V - V^T) = " + d.str() + ", expected +-1");
}

struct KnotExpr::Node {
  Kind kind;
  int p = 0, q = 0;
  std::optional<SeifertMatrix> matrix;
  std::optional<KnotExpr> lhs, rhs;
};

KnotExpr KnotExpr::unknot() {
  return KnotExpr(std::make_shared<const Node>(Node{Kind::Unknot, 0, 0, {}, {}, {}}));
}

KnotExpr KnotExpr::trefoil() {
  return KnotExpr(std::make_shared<const Node>(Node{Kind::Trefoil, 0, 0, {}, {}, {}}));
}

KnotExpr KnotExpr::figure_eight() {
  return KnotExpr(std::make_shared<const Node>(Node{Kind::FigureEight, 0, 0, {}, {}, {}}));
}

KnotExpr KnotExpr::torus(int p, int q) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1) throw NonCoprime(p, q);
  return KnotExpr(std::make_shared<const Node>(Node{Kind::Torus, p, q, {}, {}, {}}));
}

KnotExpr KnotExpr::seifert(SeifertMatrix m) {
  return KnotExpr(std::make_shared<const Node>(Node{Kind::Seifert, 0, 0, std::move(m), {}, {}}));
}

KnotExpr KnotExpr::connected_sum(KnotExpr lhs, KnotExpr rhs) {
  return KnotExpr(std::make_shared<const Node>(
      Node{Kind::Sum, 0, 0, {}, std::move(lhs), std::move(rhs)}));
}

KnotExpr::Kind KnotExpr::kind() const { return node_->kind; }
int KnotExpr::torus_p() const { return node_->p; }
int KnotExpr::torus_q() const { return node_->q; }
const SeifertMatrix& KnotExpr::matrix() const { return *node_->matrix; }
const KnotExpr& KnotExpr::left() const { return *node_->lhs; }
const KnotExpr& KnotExpr::right() const { return *node_->rhs; }

bool KnotExpr::operator==(const KnotExpr& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Unknot:
    case Kind::Trefoil:
    case Kind::FigureEight:
      return true;
    case Kind::Torus:
      return torus_p() == other.torus_p() && torus_q() == other.torus_q();
    case Kind::Seifert:
      return matrix() == other.matrix();
    case Kind::Sum:
      return left() == other.left() && right() == other.right();
  }
  return false;
}

std::string to_string(const KnotExpr& k) {
  switch (k.kind()) {
    case KnotExpr::Kind::Unknot:
      return "unknot";
    case KnotExpr::Kind::Trefoil:
      return "trefoil";
    case KnotExpr::Kind::FigureEight:
      return "figure_eight";
    case KnotExpr::Kind::Torus:
      return "torus(" + std::to_string(k.torus_p()) + "," + std::to_string(k.torus_q()) + ")";
    case KnotExpr::Kind::Seifert: {
      std::ostringstream out;
      out << "seifert [";
      const auto& m = k.matrix();
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out << ",";
        out << "[";
        for (std::size_t j = 0; j < m.size(); ++j) {
          if (j) out << ",";
          out << m.at(i, j);
        }
        out << "]";
      }
      out << "]";
      return out.str();
    }
    case KnotExpr::Kind::Sum:
      return to_string(k.left()) + " # " + to_string(k.right());
  }
  return "";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  KnotExpr parse() {
    KnotExpr result = parse_atom();
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == '#') {
      ++pos_;
      KnotExpr rhs = parse_atom();
      result = KnotExpr::connected_sum(std::move(result), std::move(rhs));
      skip_ws();
    }
    if (pos_ < text_.size()) throw ParseError("unexpected trailing input", pos_);
    return result;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string ident() {
    std::string name;
    while (pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      name.push_back(text_[pos_]);
      ++pos_;
    }
    return name;
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected an integer", pos_);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  KnotExpr parse_atom() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string name = ident();
    if (name.empty()) throw ParseError("expected a knot atom", pos_);
    if (name == "unknot") return KnotExpr::unknot();
    if (name == "trefoil") return KnotExpr::trefoil();
    if (name == "figure_eight") return KnotExpr::figure_eight();
    if (name == "torus") {
      expect('(');
      const int p = integer();
      expect(',');
      const int q = integer();
      expect(')');
      return KnotExpr::torus(p, q);
    }
    if (name == "seifert") return parse_seifert();
    throw ParseError("unknown knot name '" + name + "'", start);
  }

  KnotExpr parse_seifert() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '[')
      throw ParseError("expected a JSON matrix after 'seifert'", pos_);
    const std::size_t start = pos_;
    int depth = 0;
    std::size_t end = pos_;
    for (; end < text_.size(); ++end) {
      if (text_[end] == '[') ++depth;
      if (text_[end] == ']' && --depth == 0) {
        ++end;
        break;
      }
    }
    if (depth != 0) throw ParseError("unbalanced brackets in Seifert matrix", start);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text_.substr(start, end - start));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("bad Seifert matrix JSON: ") + e.what(), start);
    }
    if (!j.is_array()) throw ParseError("Seifert matrix must be an array of arrays", start);
    std::vector<std::vector<long long>> rows;
    for (const auto& row : j) {
      if (!row.is_array()) throw ParseError("Seifert matrix must be an array of arrays", start);
      std::vector<long long> r;
      for (const auto& x : row) {
        if (!x.is_number_integer())
          throw ParseError("Seifert matrix entries must be integers", start);
        r.push_back(x.get<long long>());
      }
      rows.push_back(std::move(r));
    }
    pos_ = end;
    return KnotExpr::seifert(SeifertMatrix(std::move(rows)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

LaurentPoly t_power_minus_one(int n) {
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  c.front() = -1;
  c.back() = 1;
  return LaurentPoly(0, std::move(c));
}

const SeifertMatrix& trefoil_matrix() {
  static const SeifertMatrix v({{-1, 1}, {0, -1}});
  return v;
}

const SeifertMatrix& figure_eight_matrix() {
  static const SeifertMatrix v({{1, 1}, {0, -1}});
  return v;
}

}  // namespace

KnotExpr knot_parse(std::string_view text) {
  return Parser(text).parse();
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("divide_exact: division by zero");
  if (num.is_zero()) return {};
  const auto& a = num.coeffs();
  const auto& b = den.coeffs();
  if (a.size() < b.size()) throw std::domain_error("divide_exact: not an exact division");
  std::vector<BigInt> rem = a;
  std::vector<BigInt> quot(a.size() - b.size() + 1);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const BigInt& lead = rem[i + b.size() - 1];
    if (lead == 0) continue;
    if (lead % b.back() != 0) throw std::domain_error("divide_exact: not an exact division");
    quot[i] = lead / b.back();
    for (std::size_t j = 0; j < b.size(); ++j) rem[i + j] -= quot[i] * b[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("divide_exact: not an exact division");
  return LaurentPoly(num.min_exp() - den.min_exp(), std::move(quot));
}

LaurentPoly poly_matrix_det(std::vector<std::vector<LaurentPoly>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("poly_matrix_det: matrix not square");
  if (n == 0) return LaurentPoly::one();
  int sign = 1;
  LaurentPoly prev = LaurentPoly::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

LaurentPoly seifert_alexander(const SeifertMatrix& v) {
  const std::size_t n = v.size();
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // V - t V^T, entry (i, j) = v_ij - t * v_ji
      std::vector<BigInt> c{BigInt(v.at(i, j)), BigInt(-v.at(j, i))};
      m[i][j] = LaurentPoly(0, std::move(c));
    }
  return normalize_symmetric(poly_matrix_det(std::move(m)));
}

LaurentPoly torus_alexander(int p, int q) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1) throw NonCoprime(p, q);
  const LaurentPoly num = t_power_minus_one(p * q) * t_power_minus_one(1);
  const LaurentPoly den = t_power_minus_one(p) * t_power_minus_one(q);
  return normalize_symmetric(divide_exact(num, den));
}

LaurentPoly alexander(const KnotExpr& k) {
  switch (k.kind()) {
    case KnotExpr::Kind::Unknot:
      return LaurentPoly::one();
    case KnotExpr::Kind::Trefoil:
      return seifert_alexander(trefoil_matrix());
    case KnotExpr::Kind::FigureEight:
      return seifert_alexander(figure_eight_matrix());
    case KnotExpr::Kind::Torus:
      return torus_alexander(k.torus_p(), k.torus_q());
    case KnotExpr::Kind::Seifert:
      return seifert_alexander(k.matrix());
    case KnotExpr::Kind::Sum:
      return alexander(k.left()) * alexander(k.right());
  }
  throw std::logic_error("alexander: unreachable");
}

BigInt knot_determinant(const KnotExpr& k) {
  return abs(eval_unit(alexander(k), -1));
}

}  // namespace knotcalc
