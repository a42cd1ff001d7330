#include "knotcalc/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>

namespace knotcalc {

using nlohmann::json;

json bigint_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer (number or decimal string), got " +
                              j.dump());
}

json laurent_to_json(const LaurentPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(bigint_to_json(c));
  return json{{"min_exp", p.min_exp()}, {"coeffs", std::move(coeffs)}};
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_object() || !j.contains("min_exp") || !j.contains("coeffs"))
    throw std::invalid_argument("Laurent polynomial JSON needs {min_exp, coeffs}");
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(bigint_from_json(c));
  return LaurentPoly(j.at("min_exp").get<int>(), std::move(coeffs));
}

json presentation_to_json(const Presentation& p) {
  json relators = json::array();
  for (const auto& r : p.relators()) {
    json word = json::array();
    for (const auto& s : r.syllables()) word.push_back(json::array({s.gen, s.exp}));
    relators.push_back(std::move(word));
  }
  return json{{"num_generators", p.num_generators()}, {"relators", std::move(relators)}};
}

Presentation presentation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num_generators") || !j.contains("relators"))
    throw std::invalid_argument("presentation JSON needs {num_generators, relators}");
  std::vector<Word> relators;
  for (const auto& word : j.at("relators")) {
    std::vector<Syllable> syllables;
    for (const auto& s : word) {
      if (!s.is_array() || s.size() != 2)
        throw std::invalid_argument("presentation JSON: each letter is [gen, exp]");
      syllables.push_back({s[0].get<int>(), s[1].get<long long>()});
    }
    relators.push_back(Word::reduce(std::move(syllables)));
  }
  return Presentation(j.at("num_generators").get<int>(), std::move(relators));
}

std::string presentation_to_text(const Presentation& p) {
  if (p.num_generators() > 26)
    throw std::invalid_argument("presentation text format supports at most 26 generators");
  std::ostringstream out;
  out << "gens:";
  for (int g = 0; g < p.num_generators(); ++g) out << " " << static_cast<char>('a' + g);
  out << " ; rels:";
  bool first = true;
  for (const auto& r : p.relators()) {
    out << (first ? " " : ", ") << to_string(r);
    first = false;
  }
  return out.str();
}

namespace {

class TextScanner {
 public:
  explicit TextScanner(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(std::string_view token) {
    skip_ws();
    if (s_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  bool eof() {
    skip_ws();
    return pos_ >= s_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  char take() { return s_[pos_++]; }

  long long integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start)
      throw std::invalid_argument("presentation text: expected an integer at offset " +
                                  std::to_string(start));
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Presentation presentation_from_text(std::string_view text) {
  TextScanner sc(text);
  if (!sc.eat("gens:"))
    throw std::invalid_argument("presentation text must start with 'gens:'");
  std::vector<char> gens;
  while (!sc.eof() && sc.peek() != ';') {
    const char c = sc.take();
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw std::invalid_argument("presentation text: generator names are single letters");
    if (std::find(gens.begin(), gens.end(), c) != gens.end())
      throw std::invalid_argument(std::string("presentation text: duplicate generator '") + c +
                                  "'");
    gens.push_back(c);
  }
  if (gens.empty()) throw std::invalid_argument("presentation text: no generators declared");
  if (!sc.eat(";") || !sc.eat("rels:"))
    throw std::invalid_argument("presentation text: expected '; rels:'");

  const auto gen_index = [&gens](char c) {
    const auto it = std::find(gens.begin(), gens.end(), c);
    if (it == gens.end())
      throw std::invalid_argument(std::string("presentation text: undeclared generator '") + c +
                                  "'");
    return static_cast<int>(it - gens.begin());
  };

  std::vector<Word> relators;
  std::vector<Syllable> current;
  while (!sc.eof()) {
    const char c = sc.peek();
    if (c == ',') {
      sc.take();
      relators.push_back(Word::reduce(std::move(current)));
      current.clear();
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw std::invalid_argument("presentation text: expected a generator letter");
    sc.take();
    long long exp = 1;
    if (sc.peek() == '^') {
      sc.take();
      exp = sc.integer();
    }
    current.push_back({gen_index(c), exp});
  }
  if (!current.empty()) relators.push_back(Word::reduce(std::move(current)));
  return Presentation(static_cast<int>(gens.size()), std::move(relators));
}

json abelian_to_json(const AbelianInvariants& inv) {
  json torsion = json::array();
  for (const auto& d : inv.torsion) torsion.push_back(bigint_to_json(d));
  return json{{"free_rank", inv.free_rank}, {"torsion", std::move(torsion)}};
}

json sw_to_json(const SWPolynomial& sw) {
  json terms = json::array();
  for (const auto& [cls, coeff] : sw.terms())
    terms.push_back(json{{"base", cls.base}, {"n", cls.n}, {"coeff", bigint_to_json(coeff)}});
  return json{{"terms", std::move(terms)}};
}

SWPolynomial sw_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms"))
    throw std::invalid_argument("SW JSON needs {terms: [{base, n, coeff}, ...]}");
  std::map<SWClass, BigInt> terms;
  for (const auto& t : j.at("terms")) {
    const SWClass cls{t.at("base").get<std::string>(), t.at("n").get<int>()};
    terms[cls] += bigint_from_json(t.at("coeff"));
  }
  return SWPolynomial(std::move(terms));
}

json intmatrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(bigint_to_json(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

IntMatrix intmatrix_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix JSON must be an array of arrays");
  IntMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("matrix JSON must be an array of arrays");
    std::vector<BigInt> r;
    for (const auto& x : row) r.push_back(bigint_from_json(x));
    m.push_back(std::move(r));
  }
  if (!is_rectangular(m)) throw std::invalid_argument("matrix JSON: rows have unequal lengths");
  return m;
}

json nest_invariants_to_json(const NestInvariants& inv) {
  return json{{"k", inv.k},
              {"degree", inv.degree},
              {"homology_class", inv.homology_class},
              {"genus", inv.genus},
              {"expected_pi1_order", inv.expected_pi1_order}};
}

}  // namespace knotcalc
