#include "adlv/cartan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "adlv/error.hpp"

namespace adlv::cartan {

std::string to_string(Lattice lattice) {
  return lattice == Lattice::coroot ? "coroot" : "coweight";
}

CoweightVec CoweightVec::operator+(const CoweightVec& o) const {
  CoweightVec r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

CoweightVec CoweightVec::operator-(const CoweightVec& o) const {
  CoweightVec r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
  return r;
}

CoweightVec CoweightVec::operator/(const Rational& d) const {
  CoweightVec r = *this;
  for (auto& c : r.coords) c /= d;
  return r;
}

std::string CartanDatum::type_label() const {
  return std::string(1, family) + std::to_string(rank);
}

std::string CartanDatum::config_string() const {
  return "type=" + type_label() + ";lattice=" + to_string(lattice);
}

namespace {

bool valid_type(char family, int rank) {
  switch (family) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

// Bourbaki labelling.
std::vector<int> make_cartan_matrix(char family, int n) {
  std::vector<int> c(n * n, 0);
  auto set = [&](int i, int j, int v) { c[(i - 1) * n + (j - 1)] = v; };
  auto link = [&](int i, int j) { set(i, j, -1); set(j, i, -1); };
  for (int i = 1; i <= n; ++i) set(i, i, 2);
  switch (family) {
    case 'A':
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      set(n - 1, n, -1);  // alpha_n short
      set(n, n - 1, -2);
      break;
    case 'C':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      set(n - 1, n, -2);  // alpha_n long
      set(n, n - 1, -1);
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case 'E':
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(1, 2);
      set(2, 3, -1);
      set(3, 2, -2);
      link(3, 4);
      break;
    case 'G':
      set(1, 2, -3);  // alpha_1 short
      set(2, 1, -1);
      break;
  }
  return c;
}

// Returns true and fills d with positive rationals such that
// d_i c_ij = d_j c_ji, i.e. diag(d) C is symmetric.
bool symmetrizable(const std::vector<int>& c, int n) {
  std::vector<Rational> d(n, Rational(0));
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j || c[i * n + j] == 0) continue;
        if ((c[i * n + j] == 0) != (c[j * n + i] == 0)) return false;
        Rational dj = d[i] * c[i * n + j] / c[j * n + i];
        if (d[j] == 0) {
          d[j] = dj;
          stack.push_back(j);
        } else if (d[j] != dj) {
          return false;
        }
      }
    }
  }
  return true;
}

void validate_cartan_matrix(const std::vector<int>& c, int n) {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int v = c[i * n + j];
      if (i == j ? v != 2 : v > 0) throw ConfigError("not a Cartan matrix");
      if (i != j && (v == 0) != (c[j * n + i] == 0)) throw ConfigError("not a Cartan matrix");
    }
  }
  if (!symmetrizable(c, n)) throw ConfigError("Cartan matrix is not symmetrizable");
}

std::vector<Rational> invert(std::vector<Rational> m, int n) {
  std::vector<Rational> inv(n * n, Rational(0));
  for (int i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && m[pivot * n + col] == 0) ++pivot;
    if (pivot == n) throw ConfigError("singular Cartan matrix");
    for (int k = 0; k < n; ++k) {
      std::swap(m[col * n + k], m[pivot * n + k]);
      std::swap(inv[col * n + k], inv[pivot * n + k]);
    }
    Rational p = m[col * n + col];
    for (int k = 0; k < n; ++k) {
      m[col * n + k] /= p;
      inv[col * n + k] /= p;
    }
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row * n + col] == 0) continue;
      Rational f = m[row * n + col];
      for (int k = 0; k < n; ++k) {
        m[row * n + k] -= f * m[col * n + k];
        inv[row * n + k] -= f * inv[col * n + k];
      }
    }
  }
  return inv;
}

int height(const RootVec& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

std::size_t expected_positive_root_count(char family, int n) {
  switch (family) {
    case 'A': return static_cast<std::size_t>(n * (n + 1) / 2);
    case 'B':
    case 'C': return static_cast<std::size_t>(n * n);
    case 'D': return static_cast<std::size_t>(n * (n - 1));
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

RootSystem::RootSystem(const CartanDatum& datum) : rank_(datum.rank), cartan_(datum.matrix) {
  validate_cartan_matrix(cartan_, rank_);
  const int n = rank_;

  // Close the simple roots under simple reflections, keeping positive
  // roots only; coroots are carried along in parallel.
  std::map<RootVec, RootVec> found;
  std::vector<RootVec> queue;
  for (int i = 0; i < n; ++i) {
    RootVec e(n, 0);
    e[i] = 1;
    found.emplace(e, e);
    queue.push_back(e);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const RootVec root = queue[head];
    const RootVec coroot = found.at(root);
    for (int i = 0; i < n; ++i) {
      int a = 0, b = 0;
      for (int j = 0; j < n; ++j) {
        a += cartan(i, j) * root[j];    // <alpha_i^vee, root>
        b += coroot[j] * cartan(j, i);  // <coroot, alpha_i>
      }
      RootVec r = root, cr = coroot;
      r[i] -= a;
      cr[i] -= b;
      if (std::any_of(r.begin(), r.end(), [](int x) { return x < 0; })) continue;
      if (found.emplace(r, cr).second) queue.push_back(r);
    }
  }
  for (const auto& [root, coroot] : found) positive_roots_.push_back(root);
  std::stable_sort(positive_roots_.begin(), positive_roots_.end(),
                   [](const RootVec& a, const RootVec& b) {
                     int ha = height(a), hb = height(b);
                     if (ha != hb) return ha < hb;
                     return a > b;  // e_1 before e_2 at height one
                   });
  for (const auto& root : positive_roots_) positive_coroots_.push_back(found.at(root));
  highest_ = positive_roots_.size() - 1;

  two_rho_.assign(n, 0);
  for (const auto& root : positive_roots_) {
    for (int j = 0; j < n; ++j) two_rho_[j] += root[j];
  }
  for (int i = 0; i < n; ++i) {
    if (highest_root()[i] == 1) minuscule_.push_back(i + 1);
  }

  std::vector<Rational> transpose(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) transpose[i * n + j] = cartan(j, i);
  }
  inverse_transpose_ = invert(transpose, n);
}

RootVec RootSystem::simple_root(int i) const {
  RootVec e(rank_, 0);
  e.at(i) = 1;
  return e;
}

RootVec RootSystem::simple_coroot(int i) const { return simple_root(i); }

void RootSystem::check_dimension(std::size_t n) const {
  if (n != static_cast<std::size_t>(rank_)) {
    throw ConfigError("dimension mismatch: expected " + std::to_string(rank_) + ", got " +
                      std::to_string(n));
  }
}

CoweightVec RootSystem::fundamental_coweight(int i) const {
  RationalVec p(rank_, Rational(0));
  p.at(i) = 1;
  return from_simple_pairings(p);
}

CoweightVec RootSystem::coroot_as_coweight(const RootVec& coroot) const {
  check_dimension(coroot.size());
  CoweightVec v = CoweightVec::zero(rank_);
  for (int i = 0; i < rank_; ++i) v.coords[i] = coroot[i];
  return v;
}

Rational RootSystem::pair(const CoweightVec& v, const RootVec& alpha) const {
  check_dimension(v.size());
  check_dimension(alpha.size());
  Rational sum(0);
  for (int i = 0; i < rank_; ++i) {
    if (v.coords[i] == 0) continue;
    int row = 0;
    for (int j = 0; j < rank_; ++j) row += cartan(i, j) * alpha[j];
    sum += v.coords[i] * row;
  }
  return sum;
}

RationalVec RootSystem::simple_pairings(const CoweightVec& v) const {
  check_dimension(v.size());
  RationalVec p(rank_, Rational(0));
  for (int j = 0; j < rank_; ++j) {
    for (int i = 0; i < rank_; ++i) p[j] += v.coords[i] * cartan(i, j);
  }
  return p;
}

CoweightVec RootSystem::from_simple_pairings(const RationalVec& pairings) const {
  check_dimension(pairings.size());
  CoweightVec v = CoweightVec::zero(rank_);
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) v.coords[i] += inverse_transpose_[i * rank_ + j] * pairings[j];
  }
  return v;
}

CoweightVec RootSystem::reflect(const CoweightVec& v, int i) const {
  CoweightVec r = v;
  r.coords.at(i) -= pair(v, simple_root(i));
  return r;
}

bool RootSystem::is_dominant(const CoweightVec& v) const {
  auto p = simple_pairings(v);
  return std::all_of(p.begin(), p.end(), [](const Rational& x) { return x >= 0; });
}

bool RootSystem::is_root(const RootVec& alpha) const {
  if (alpha.size() != static_cast<std::size_t>(rank_)) return false;
  RootVec neg(alpha.size());
  std::transform(alpha.begin(), alpha.end(), neg.begin(), [](int x) { return -x; });
  return std::find(positive_roots_.begin(), positive_roots_.end(), alpha) != positive_roots_.end() ||
         std::find(positive_roots_.begin(), positive_roots_.end(), neg) != positive_roots_.end();
}

Cartan build_cartan(char family, int rank, Lattice lattice) {
  if (!valid_type(family, rank)) {
    throw ConfigError("invalid root system type " + std::string(1, family) + std::to_string(rank));
  }
  CartanDatum datum{family, rank, make_cartan_matrix(family, rank), lattice};
  RootSystem roots(datum);
  if (roots.positive_roots().size() != expected_positive_root_count(family, rank)) {
    throw ConfigError("root enumeration failed for " + datum.type_label());
  }
  return {std::move(datum), std::move(roots)};
}

Cartan parse_cartan_config(std::string_view config) {
  std::string type;
  Lattice lattice = Lattice::coroot;
  while (!config.empty()) {
    auto semi = config.find(';');
    std::string_view clause = config.substr(0, semi);
    config = semi == std::string_view::npos ? std::string_view{} : config.substr(semi + 1);
    if (clause.empty()) continue;
    auto eq = clause.find('=');
    if (eq == std::string_view::npos) throw ParseError("config clause without '=': " + std::string(clause));
    std::string_view key = clause.substr(0, eq), value = clause.substr(eq + 1);
    if (key == "type") {
      type = value;
    } else if (key == "lattice") {
      if (value == "coroot") lattice = Lattice::coroot;
      else if (value == "coweight") lattice = Lattice::coweight;
      else throw ConfigError("unknown lattice '" + std::string(value) + "'");
    } else {
      throw ParseError("unknown config key '" + std::string(key) + "'");
    }
  }
  if (type.size() < 2) throw ConfigError("config needs type=<family><rank>");
  int rank = 0;
  for (std::size_t i = 1; i < type.size(); ++i) {
    if (type[i] < '0' || type[i] > '9') throw ParseError("malformed type '" + type + "'");
    rank = rank * 10 + (type[i] - '0');
  }
  return build_cartan(type[0], rank, lattice);
}

std::pair<CoweightVec, std::vector<int>> dominant_rep(const RootSystem& rs, const CoweightVec& v) {
  CoweightVec cur = v;
  std::vector<int> applied;
  for (;;) {
    auto p = rs.simple_pairings(cur);
    auto neg = std::find_if(p.begin(), p.end(), [](const Rational& x) { return x < 0; });
    if (neg == p.end()) break;
    int i = static_cast<int>(neg - p.begin());
    cur = rs.reflect(cur, i);
    applied.push_back(i + 1);
  }
  // s_{j_k} ... s_{j_1} v is dominant; as a product word that is the reverse.
  std::reverse(applied.begin(), applied.end());
  return {cur, applied};
}

bool dominance_leq(const RootSystem& rs, const CoweightVec& v1, const CoweightVec& v2) {
  if (!rs.is_dominant(v1) || !rs.is_dominant(v2)) {
    throw ConfigError("dominance_leq expects dominant coweights");
  }
  auto diff = v2 - v1;
  return std::all_of(diff.coords.begin(), diff.coords.end(), [](const Rational& x) { return x >= 0; });
}

}  // namespace adlv::cartan
