#include "knotcalc/fpgroups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

namespace knotcalc {

// ---------------------------------------------------------------------------
// Words

Word Word::reduce(std::vector<Syllable> raw) {
  Word w;
  for (const auto& s : raw) {
    if (s.exp == 0) continue;
    if (!w.syllables_.empty() && w.syllables_.back().gen == s.gen) {
      w.syllables_.back().exp += s.exp;
      if (w.syllables_.back().exp == 0) w.syllables_.pop_back();
    } else {
      w.syllables_.push_back(s);
    }
  }
  return w;
}

Word::Word(std::initializer_list<Syllable> raw) : Word(reduce(std::vector<Syllable>(raw))) {}

long long Word::letter_count() const {
  long long n = 0;
  for (const auto& s : syllables_) n += s.exp < 0 ? -s.exp : s.exp;
  return n;
}

Word Word::inverse() const {
  std::vector<Syllable> rev;
  rev.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    rev.push_back({it->gen, -it->exp});
  return reduce(std::move(rev));
}

Word Word::cyclically_reduced() const {
  std::vector<Syllable> s = syllables_;
  while (s.size() >= 2 && s.front().gen == s.back().gen) {
    s.front().exp += s.back().exp;
    s.pop_back();
    if (s.front().exp == 0) s.erase(s.begin());
  }
  Word w;
  w.syllables_ = std::move(s);
  return w;
}

namespace {

std::vector<Syllable> rotation_min(const std::vector<Syllable>& s) {
  // Lexicographically smallest rotation of the run sequence. For cyclically
  // reduced words the run sequence is faithful up to rotation.
  std::vector<Syllable> best = s;
  std::vector<Syllable> cur = s;
  for (std::size_t r = 1; r < s.size(); ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    const auto cmp = [](const Syllable& a, const Syllable& b) {
      if (a.gen != b.gen) return a.gen < b.gen;
      return a.exp < b.exp;
    };
    if (std::lexicographical_compare(cur.begin(), cur.end(), best.begin(), best.end(), cmp))
      best = cur;
  }
  return best;
}

std::vector<Syllable> cyclic_key(const Word& w) {
  return rotation_min(w.cyclically_reduced().syllables());
}

/// Canonical key of a relator up to rotation and inversion.
std::vector<Syllable> relator_key(const Word& w) {
  const Word c = w.cyclically_reduced();
  std::vector<Syllable> a = rotation_min(c.syllables());
  std::vector<Syllable> b = rotation_min(c.inverse().syllables());
  const auto cmp = [](const Syllable& x, const Syllable& y) {
    if (x.gen != y.gen) return x.gen < y.gen;
    return x.exp < y.exp;
  };
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), cmp) ? a : b;
}

}  // namespace

bool cyclically_equal(const Word& u, const Word& w) {
  return cyclic_key(u) == cyclic_key(w);
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) out << " ";
    first = false;
    if (s.gen < 26)
      out << static_cast<char>('a' + s.gen);
    else
      out << "x" << s.gen;
    if (s.exp != 1) out << "^" << s.exp;
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << to_string(w); }

// ---------------------------------------------------------------------------
// Presentations

Presentation::Presentation(int num_generators, std::vector<Word> relators)
    : num_generators_(num_generators) {
  if (num_generators < 1)
    throw std::invalid_argument("Presentation: need at least one generator");
  std::vector<std::vector<Syllable>> seen;
  for (const auto& r : relators) {
    for (const auto& s : r.syllables())
      if (s.gen < 0 || s.gen >= num_generators)
        throw std::invalid_argument("Presentation: relator uses generator " +
                                    std::to_string(s.gen) + " out of range");
    Word c = r.cyclically_reduced();
    if (c.empty()) continue;
    auto key = relator_key(c);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(std::move(key));
    relators_.push_back(std::move(c));
  }
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct SnfWorker {
  IntMatrix m;
  IntMatrix u, v;
  std::size_t rows, cols;

  explicit SnfWorker(IntMatrix input)
      : m(std::move(input)),
        rows(m.size()),
        cols(m.empty() ? 0 : m[0].size()) {
    u = identity_matrix(rows);
    v = identity_matrix(cols);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    std::swap(m[a], m[b]);
    std::swap(u[a], u[b]);
  }

  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
    for (std::size_t i = 0; i < cols; ++i) std::swap(v[i][a], v[i][b]);
  }

  // row a -= q * row b
  void row_sub(std::size_t a, std::size_t b, const BigInt& q) {
    for (std::size_t j = 0; j < cols; ++j) m[a][j] -= q * m[b][j];
    for (std::size_t j = 0; j < rows; ++j) u[a][j] -= q * u[b][j];
  }

  // col a -= q * col b
  void col_sub(std::size_t a, std::size_t b, const BigInt& q) {
    for (std::size_t i = 0; i < rows; ++i) m[i][a] -= q * m[i][b];
    for (std::size_t i = 0; i < cols; ++i) v[i][a] -= q * v[i][b];
  }

  void row_add(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols; ++j) m[a][j] += m[b][j];
    for (std::size_t j = 0; j < rows; ++j) u[a][j] += u[b][j];
  }

  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols; ++j) m[a][j] = -m[a][j];
    for (std::size_t j = 0; j < rows; ++j) u[a][j] = -u[a][j];
  }

  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    BigInt best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        const BigInt a = abs(m[i][j]);
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  void run() {
    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
      for (;;) {
        std::size_t pi = t, pj = t;
        if (!find_pivot(t, pi, pj)) return;  // remaining block is zero
        if (pi != t) swap_rows(t, pi);
        if (pj != t) swap_cols(t, pj);

        bool dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (m[i][t] == 0) continue;
          const BigInt q = m[i][t] / m[t][t];
          if (q != 0) row_sub(i, t, q);
          if (m[i][t] != 0) dirty = true;  // remainder smaller than pivot
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[t][j] == 0) continue;
          const BigInt q = m[t][j] / m[t][t];
          if (q != 0) col_sub(j, t, q);
          if (m[t][j] != 0) dirty = true;
        }
        if (dirty) continue;  // re-pick a strictly smaller pivot

        // Divisibility fix: fold a non-multiple into row t and keep reducing.
        bool fixed = true;
        for (std::size_t i = t + 1; i < rows && fixed; ++i)
          for (std::size_t j = t + 1; j < cols && fixed; ++j)
            if (m[i][j] % m[t][t] != 0) {
              row_add(t, i);
              fixed = false;
            }
        if (fixed) break;
      }
      if (m[t][t] < 0) negate_row(t);
    }
  }
};

}  // namespace

SmithForm smith_normal_form(IntMatrix input) {
  if (!is_rectangular(input)) throw std::invalid_argument("smith_normal_form: ragged matrix");
  SnfWorker w(std::move(input));
  w.run();
  SmithForm out;
  const std::size_t k = std::min(w.rows, w.cols);
  out.divisors.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.divisors.push_back(w.m[i][i]);
  out.u = std::move(w.u);
  out.v = std::move(w.v);
  return out;
}

AbelianInvariants abelianize(const Presentation& p) {
  const std::size_t n = static_cast<std::size_t>(p.num_generators());
  AbelianInvariants inv;
  if (p.relators().empty()) {
    inv.free_rank = static_cast<int>(n);
    return inv;
  }
  IntMatrix m(p.relators().size(), std::vector<BigInt>(n, 0));
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (const auto& s : p.relators()[r].syllables())
      m[r][static_cast<std::size_t>(s.gen)] += s.exp;
  const SmithForm snf = smith_normal_form(std::move(m));
  int nonzero = 0;
  for (const auto& d : snf.divisors) {
    if (d == 0) continue;
    ++nonzero;
    if (d >= 2) inv.torsion.push_back(d);
  }
  inv.free_rank = static_cast<int>(n) - nonzero;
  return inv;
}

// ---------------------------------------------------------------------------
// Permutations

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (const int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || hit[static_cast<std::size_t>(x)])
      throw std::invalid_argument("Permutation: images are not a bijection");
    hit[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::then(const Permutation& next) const {
  if (degree() != next.degree())
    throw std::invalid_argument("Permutation: degree mismatch in composition");
  std::vector<int> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    img[i] = next.images_[static_cast<std::size_t>(images_[i])];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    img[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(img));
}

Permutation Permutation::power(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  long long n = e < 0 ? -e : e;
  Permutation result = identity(degree());
  while (n > 0) {
    if (n & 1) result = result.then(base);
    n >>= 1;
    if (n > 0) base = base.then(base);
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

HomomorphismCheck verify_homomorphism(const Presentation& p,
                                      const std::vector<Permutation>& images) {
  if (images.size() != static_cast<std::size_t>(p.num_generators()))
    throw ArityMismatch("verify_homomorphism: expected " +
                        std::to_string(p.num_generators()) + " images, got " +
                        std::to_string(images.size()));
  for (const auto& g : images)
    if (g.degree() != images[0].degree())
      throw ArityMismatch("verify_homomorphism: images act on different point sets");

  HomomorphismCheck out;
  out.valid = true;
  for (const auto& r : p.relators()) {
    Permutation img = Permutation::identity(images[0].degree());
    for (const auto& s : r.syllables())
      img = img.then(images[static_cast<std::size_t>(s.gen)].power(s.exp));
    if (!img.is_identity()) {
      out.valid = false;
      break;
    }
  }
  out.image_abelian = true;
  for (std::size_t i = 0; i < images.size() && out.image_abelian; ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (!(images[i].then(images[j]) == images[j].then(images[i]))) {
        out.image_abelian = false;
        break;
      }
  return out;
}

// ---------------------------------------------------------------------------
// Coset enumeration

CosetTable::CosetTable(int num_generators, std::vector<std::vector<int>> rows)
    : num_generators_(num_generators), rows_(std::move(rows)) {}

int CosetTable::act(int coset, int gen, int direction) const {
  const std::size_t col = 2 * static_cast<std::size_t>(gen) + (direction < 0 ? 1 : 0);
  return rows_[static_cast<std::size_t>(coset)][col];
}

int CosetTable::trace(int coset, const Word& w) const {
  int c = coset;
  for (const auto& s : w.syllables()) {
    const int dir = s.exp < 0 ? -1 : 1;
    for (long long i = 0; i < (s.exp < 0 ? -s.exp : s.exp); ++i) c = act(c, s.gen, dir);
  }
  return c;
}

Permutation CosetTable::generator_action(int gen) const {
  std::vector<int> img(rows_.size());
  for (std::size_t c = 0; c < rows_.size(); ++c)
    img[c] = act(static_cast<int>(c), gen, +1);
  return Permutation(std::move(img));
}

namespace {

constexpr int kUndef = -1;

struct Enumerator {
  int ncols;
  int max_cosets;
  std::vector<std::vector<int>> relator_cols;
  std::vector<std::vector<int>> table;
  std::vector<int> parent;  // union-find over coset indices
  std::deque<std::pair<int, int>> pending;
  bool overflowed = false;

  int find(int c) {
    while (parent[static_cast<std::size_t>(c)] != c) {
      parent[static_cast<std::size_t>(c)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(c)])];
      c = parent[static_cast<std::size_t>(c)];
    }
    return c;
  }

  bool alive(int c) { return find(c) == c; }

  int get(int c, int col) {
    const int v = table[static_cast<std::size_t>(find(c))][static_cast<std::size_t>(col)];
    return v == kUndef ? kUndef : find(v);
  }

  void set(int c, int col, int d) {
    c = find(c);
    d = find(d);
    table[static_cast<std::size_t>(c)][static_cast<std::size_t>(col)] = d;
    table[static_cast<std::size_t>(d)][static_cast<std::size_t>(col ^ 1)] = c;
  }

  int define(int c, int col) {
    if (static_cast<int>(table.size()) >= max_cosets) {
      overflowed = true;
      return kUndef;
    }
    const int n = static_cast<int>(table.size());
    table.emplace_back(static_cast<std::size_t>(ncols), kUndef);
    parent.push_back(n);
    set(c, col, n);
    return n;
  }

  void coincide(int a, int b) {
    pending.clear();
    pending.emplace_back(a, b);
    while (!pending.empty()) {
      auto [x, y] = pending.front();
      pending.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (x > y) std::swap(x, y);  // keep the first-defined coset
      parent[static_cast<std::size_t>(y)] = x;
      for (int col = 0; col < ncols; ++col) {
        int z = table[static_cast<std::size_t>(y)][static_cast<std::size_t>(col)];
        if (z == kUndef) continue;
        z = find(z);
        const int w = table[static_cast<std::size_t>(x)][static_cast<std::size_t>(col)];
        if (w == kUndef) {
          table[static_cast<std::size_t>(x)][static_cast<std::size_t>(col)] = z;
          const int mirror =
              table[static_cast<std::size_t>(z)][static_cast<std::size_t>(col ^ 1)];
          if (mirror == kUndef)
            table[static_cast<std::size_t>(z)][static_cast<std::size_t>(col ^ 1)] = x;
          else if (find(mirror) != x)
            pending.emplace_back(find(mirror), x);
        } else if (find(w) != z) {
          pending.emplace_back(find(w), z);
        }
      }
    }
  }

  // Scans relator from start, filling gaps; defines new cosets as needed.
  // Returns false on overflow.
  bool scan_and_fill(int start, const std::vector<int>& word) {
    int fwd = find(start);
    int bwd = fwd;
    std::size_t i = 0, j = word.size();
    for (;;) {
      while (i < j) {
        const int nxt = get(fwd, word[i]);
        if (nxt == kUndef) break;
        fwd = nxt;
        ++i;
      }
      if (i == j) {
        if (fwd != bwd) coincide(fwd, bwd);
        return true;
      }
      while (j > i) {
        const int prv = get(bwd, word[j - 1] ^ 1);
        if (prv == kUndef) break;
        bwd = prv;
        --j;
      }
      if (j == i) {
        if (fwd != bwd) coincide(fwd, bwd);
        return true;
      }
      if (j == i + 1) {
        set(fwd, word[i], bwd);
        return true;
      }
      const int n = define(fwd, word[i]);
      if (n == kUndef) return false;
      fwd = n;
      ++i;
    }
  }
};

std::vector<int> relator_columns(const Word& w) {
  std::vector<int> cols;
  for (const auto& s : w.syllables()) {
    const int col = 2 * s.gen + (s.exp < 0 ? 1 : 0);
    for (long long i = 0; i < (s.exp < 0 ? -s.exp : s.exp); ++i) cols.push_back(col);
  }
  return cols;
}

}  // namespace

std::optional<CosetTable> todd_coxeter(const Presentation& p, int max_cosets) {
  if (max_cosets < 1) throw std::invalid_argument("todd_coxeter: max_cosets must be >= 1");
  long long total_letters = 0;
  for (const auto& r : p.relators()) total_letters += r.letter_count();
  if (total_letters > 10'000'000)
    throw std::invalid_argument("todd_coxeter: relators too long to trace");

  Enumerator e;
  e.ncols = 2 * p.num_generators();
  e.max_cosets = max_cosets;
  for (const auto& r : p.relators()) e.relator_cols.push_back(relator_columns(r));

  e.table.emplace_back(static_cast<std::size_t>(e.ncols), kUndef);
  e.parent.push_back(0);

  for (int alpha = 0; alpha < static_cast<int>(e.table.size()); ++alpha) {
    if (!e.alive(alpha)) continue;
    bool died = false;
    for (const auto& w : e.relator_cols) {
      if (!e.scan_and_fill(alpha, w)) return std::nullopt;
      if (!e.alive(alpha)) {
        died = true;
        break;
      }
    }
    if (died) continue;
    for (int col = 0; col < e.ncols; ++col) {
      if (e.get(alpha, col) != kUndef) continue;
      if (e.define(alpha, col) == kUndef) return std::nullopt;
    }
  }

  // Compact: live cosets keep their first-definition order.
  std::vector<int> index(e.table.size(), kUndef);
  int live = 0;
  for (std::size_t c = 0; c < e.table.size(); ++c)
    if (e.alive(static_cast<int>(c))) index[c] = live++;
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<std::size_t>(live));
  for (std::size_t c = 0; c < e.table.size(); ++c) {
    if (index[c] == kUndef) continue;
    std::vector<int> row(static_cast<std::size_t>(e.ncols));
    for (int col = 0; col < e.ncols; ++col) {
      const int v = e.get(static_cast<int>(c), col);
      if (v == kUndef) throw std::logic_error("todd_coxeter: incomplete table after closure");
      row[static_cast<std::size_t>(col)] = index[static_cast<std::size_t>(v)];
    }
    rows.push_back(std::move(row));
  }

  CosetTable result(p.num_generators(), std::move(rows));

  // Soundness check: generator columns are permutations and every relator
  // traces to identity from every coset.
  for (int g = 0; g < p.num_generators(); ++g) {
    const Permutation perm = result.generator_action(g);
    for (int c = 0; c < result.size(); ++c)
      if (result.act(perm.apply(c), g, -1) != c)
        throw std::logic_error("todd_coxeter: inverse action mismatch");
  }
  for (const auto& r : p.relators())
    for (int c = 0; c < result.size(); ++c)
      if (result.trace(c, r) != c) throw std::logic_error("todd_coxeter: relator trace failed");

  return result;
}

std::optional<bool> is_cyclic_of_order(const Presentation& p, long long n, int max_cosets) {
  if (n < 1) throw std::invalid_argument("is_cyclic_of_order: order must be positive");
  const auto table = todd_coxeter(p, max_cosets);
  if (!table) return std::nullopt;
  if (table->size() != n) return false;
  const AbelianInvariants inv = abelianize(p);
  if (inv.free_rank != 0) return false;
  if (n == 1) return inv.torsion.empty();
  return inv.torsion.size() == 1 && inv.torsion[0] == n;
}

}  // namespace knotcalc
