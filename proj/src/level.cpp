#include "drinfeld/level.hpp"

#include <algorithm>
#include <sstream>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

constexpr int kMaxModulusDegree = 4;

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  size_t b = s.find_last_not_of(" \t");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

// Splits "P^r" into (P, r); r = 1 when no exponent is given. Parentheses
// around P are allowed: "(t+1)^2".
std::pair<std::string, int> split_power(const std::string& s) {
  std::string x = trim(s);
  if (!x.empty() && x.front() == '(') {
    size_t close = x.find(')');
    if (close == std::string::npos) throw ConfigError("unbalanced parenthesis in '" + s + "'");
    std::string inner = x.substr(1, close - 1);
    std::string rest = x.substr(close + 1);
    if (rest.empty()) return {inner, 1};
    if (rest[0] != '^') throw ConfigError("bad exponent in '" + s + "'");
    return {inner, std::stoi(rest.substr(1))};
  }
  // "t^2" is ambiguous between a polynomial and a power of t; both readings
  // give the same ideal, so read it as a power of the base.
  size_t caret = x.rfind('^');
  if (caret != std::string::npos && x.find_first_of("+-", 1) == std::string::npos)
    return {x.substr(0, caret), std::stoi(x.substr(caret + 1))};
  return {x, 1};
}

// Returns c with p = t - c (p must be monic of degree one).
Fq degree_one_root(const Field& f, const Poly& p) {
  if (p.degree() != 1) throw ConfigError("the prime at level must have degree one (got " + p.str() + ")");
  Poly mp = p.monic();
  return f.neg(mp.coeff(0));
}

}  // namespace

std::string LevelSpec::str() const {
  std::ostringstream os;
  switch (theta) {
    case Theta::Trivial: os << "gamma1:"; break;
    case Theta::Full: os << "gamma0p:"; break;
    case Theta::Generated: os << "theta:"; break;
  }
  if (n.degree() > 0) os << "(" << n.str() << "),";
  os << "t^" << r;
  if (theta == Theta::Generated) {
    os << "[";
    for (size_t i = 0; i < theta_gens.size(); ++i) os << (i ? "/" : "") << theta_gens[i].str();
    os << "]";
  }
  return os.str();
}

LevelSpec gamma1_level(const Field& f, const Poly& n, int r) {
  return {n.is_zero() ? Poly::constant(f, 1) : n, r, LevelSpec::Theta::Trivial, {}};
}

LevelSpec gamma0p_level(const Field& f, const Poly& n, int r) {
  return {n.is_zero() ? Poly::constant(f, 1) : n, r, LevelSpec::Theta::Full, {}};
}

LevelSpec theta_level(const Field& f, const Poly& n, int r, std::vector<Poly> gens) {
  return {n.is_zero() ? Poly::constant(f, 1) : n, r, LevelSpec::Theta::Generated, std::move(gens)};
}

LevelSpec parse_level(const Field& f, const std::string& text, int theta_r, Fq* shift) {
  size_t colon = text.find(':');
  if (colon == std::string::npos) throw ConfigError("level must look like gamma1:..., gamma0p:... or theta:...");
  std::string kind = trim(text.substr(0, colon));
  std::string body = text.substr(colon + 1);
  Fq c = 0;
  auto sub = [&](const Poly& p) { return c ? shift_var(p, c) : p; };

  if (kind == "theta") {
    std::vector<Poly> gens;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, '/'))
      if (!trim(item).empty()) gens.push_back(parse_poly(f, item));
    if (theta_r < 1) throw ConfigError("theta levels need r >= 1");
    if (shift) *shift = 0;
    return theta_level(f, Poly::constant(f, 1), theta_r, gens);
  }

  std::vector<std::string> parts;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.empty() || parts.size() > 2) throw ConfigError("bad level '" + text + "'");

  auto [pstr, r] = split_power(parts.back());
  Poly prime = parse_poly(f, pstr);
  Poly n_extra = Poly::constant(f, 1);
  if (parts.size() == 1 && r == 1 && prime.degree() > 1) {
    // A single modulus m = n t^r.
    r = prime.valuation();
    if (r < 1 || r == kInf) throw ConfigError("level modulus must be divisible by t");
    n_extra = exact_div(prime, Poly::monomial(f, 1, r));
    prime = Poly::t(f);
  }
  c = degree_one_root(f, prime);
  if (r < 1) throw ConfigError("exponent r must be >= 1");
  Poly n = parts.size() == 2 ? sub(parse_poly(f, parts[0])) : n_extra;
  if (shift) *shift = c;

  if (kind == "gamma1") return gamma1_level(f, n, r);
  if (kind == "gamma0p") return gamma0p_level(f, n, r);
  throw ConfigError("unknown level kind '" + kind + "'");
}

Mat2 lift_sl2(const Mat2& x, const Poly& m) {
  const Field& f = *m.field();
  Mat2 g = x.reduced_mod(m);
  if (g.det().is_one()) return g;
  if (!((g.det() - Poly::constant(f, 1)) % m).is_zero()) throw InternalError("lift of a matrix with det != 1 mod m");
  Poly c = g.c.is_zero() ? m : g.c;
  Poly d = g.d;
  bool found = false;
  for (long long idx = 0; idx < 100000 && !found; ++idx) {
    Poly y = poly_from_index(f, idx, 8);
    Poly cand = d + m * y;
    if (gcd(cand, c).is_one()) {
      d = cand;
      found = true;
    }
  }
  if (!found) throw BudgetError("no coprime lift found");
  Poly rhs = exact_div(Poly::constant(f, 1) - (g.a * d - g.b * c), m);
  ExtGcd eg = ext_gcd(d, c);
  Poly alpha = eg.x * rhs;
  Poly beta;
  if (c.degree() > 0) {
    alpha = alpha % c;
    beta = exact_div(alpha * d - rhs, c);
  } else {
    beta = -(eg.y * rhs);
  }
  Mat2 out{g.a + m * alpha, g.b + m * beta, c, d};
  if (!out.det().is_one()) throw InternalError("SL_2 lift failed");
  return out;
}

QuotientData::QuotientData(const Field& f, LevelSpec level) : f_(&f), level_(std::move(level)) {
  if (level_.n.is_zero() || level_.n.coeff(0) == 0) throw ConfigError("level n must be coprime to t");
  if (level_.r < 1) throw ConfigError("level exponent r must be >= 1");
  level_.n = level_.n.monic();
  m_ = level_.modulus();
  deg_m_ = m_.degree();
  if (deg_m_ > kMaxModulusDegree)
    throw BudgetError("level modulus degree " + std::to_string(deg_m_) + " exceeds the supported " +
                      std::to_string(kMaxModulusDegree));
  residues_ = polys_below_degree(f, deg_m_);
  rsz_ = static_cast<long long>(residues_.size());
  mul_.resize(rsz_ * rsz_);
  add_.resize(rsz_ * rsz_);
  sub_.resize(rsz_ * rsz_);
  for (long long a = 0; a < rsz_; ++a)
    for (long long b = 0; b < rsz_; ++b) {
      mul_[a * rsz_ + b] = static_cast<int>(poly_index((residues_[a] * residues_[b]) % m_));
      add_[a * rsz_ + b] = static_cast<int>(poly_index(residues_[a] + residues_[b]));
      sub_[a * rsz_ + b] = static_cast<int>(poly_index(residues_[a] - residues_[b]));
    }
  tr_ = Poly::monomial(f, 1, level_.r);
  mod_n_.resize(rsz_);
  mod_tr_.resize(rsz_);
  mod_t_.resize(rsz_);
  for (long long a = 0; a < rsz_; ++a) {
    mod_n_[a] = static_cast<int>(poly_index(residues_[a] % level_.n));
    mod_tr_[a] = static_cast<int>(poly_index(residues_[a].truncated(level_.r)));
    mod_t_[a] = residues_[a].coeff(0);
  }

  long long qr = 1;
  for (int i = 0; i < level_.r; ++i) qr *= f.q();
  theta_.assign(qr, 0);
  switch (level_.theta) {
    case LevelSpec::Theta::Trivial: theta_[1] = 1; break;
    case LevelSpec::Theta::Full:
      for (long long i = 0; i < qr; ++i) theta_[i] = (i % f.q()) == 1;
      break;
    case LevelSpec::Theta::Generated: {
      std::vector<Poly> gens;
      for (const auto& g : level_.theta_gens) {
        Poly gr = g.truncated(level_.r);
        if (gr.coeff(0) != 1) throw ConfigError("theta generators must be congruent to 1 mod t");
        gens.push_back(gr);
      }
      std::vector<long long> todo{1};
      theta_[1] = 1;
      while (!todo.empty()) {
        Poly x = poly_from_index(f, todo.back(), level_.r);
        todo.pop_back();
        for (const auto& g : gens) {
          long long y = poly_index((x * g).truncated(level_.r));
          if (!theta_[y]) {
            theta_[y] = 1;
            todo.push_back(y);
          }
        }
      }
      break;
    }
  }
  w_ = Mat2::from_ints(f, 0, -1, 1, 0);
  build_gamma1t_cosets();
}

int QuotientData::residue(const Poly& p) const { return static_cast<int>(poly_index(p % m_)); }

std::uint64_t QuotientData::key(const Mat2& x) const {
  std::uint64_t R = static_cast<std::uint64_t>(rsz_);
  return ((static_cast<std::uint64_t>(residue(x.a)) * R + residue(x.b)) * R + residue(x.c)) * R + residue(x.d);
}

bool QuotientData::member_residue(std::uint64_t k) const {
  std::uint64_t R = static_cast<std::uint64_t>(rsz_);
  int d = static_cast<int>(k % R);
  k /= R;
  int c = static_cast<int>(k % R);
  k /= R;
  k /= R;
  int a = static_cast<int>(k);
  const int one_n = level_.n.degree() == 0 ? 0 : 1;
  if (mod_n_[a] != one_n || mod_n_[c] != 0 || mod_n_[d] != one_n) return false;
  if (mod_tr_[c] != 0) return false;
  return theta_[mod_tr_[a]] && theta_[mod_tr_[d]];
}

bool QuotientData::member(const Mat2& g) const { return g.det().is_one() && member_residue(key(g)); }

bool QuotientData::member_gamma1t(const Mat2& g) const {
  return g.det().is_one() && g.a.coeff(0) == 1 && g.c.coeff(0) == 0 && g.d.coeff(0) == 1;
}

void QuotientData::build_gamma1t_cosets() {
  const std::uint64_t R = static_cast<std::uint64_t>(rsz_);
  std::vector<int> ones, zeros;
  for (int i = 0; i < rsz_; ++i) {
    if (mod_t_[i] == 1) ones.push_back(i);
    if (mod_t_[i] == 0) zeros.push_back(i);
  }
  std::vector<std::uint64_t> h1, h;
  for (int a : ones)
    for (int d : ones) {
      int ad = mul_[a * rsz_ + d];
      for (int c : zeros)
        for (int b = 0; b < rsz_; ++b) {
          if (sub_[ad * rsz_ + mul_[b * rsz_ + c]] != 1) continue;
          std::uint64_t k = ((a * R + b) * R + c) * R + d;
          h1.push_back(k);
          if (member_residue(k)) h.push_back(k);
        }
    }
  auto decode = [&](std::uint64_t k, int out[4]) {
    for (int i = 3; i >= 0; --i) {
      out[i] = static_cast<int>(k % R);
      k /= R;
    }
  };
  auto mul = [&](std::uint64_t x, std::uint64_t y) {
    int a[4], b[4];
    decode(x, a);
    decode(y, b);
    auto mm = [&](int i, int j) { return mul_[i * rsz_ + j]; };
    auto ad = [&](int i, int j) { return add_[i * rsz_ + j]; };
    std::uint64_t e0 = ad(mm(a[0], b[0]), mm(a[1], b[2]));
    std::uint64_t e1 = ad(mm(a[0], b[1]), mm(a[1], b[3]));
    std::uint64_t e2 = ad(mm(a[2], b[0]), mm(a[3], b[2]));
    std::uint64_t e3 = ad(mm(a[2], b[1]), mm(a[3], b[3]));
    return ((e0 * R + e1) * R + e2) * R + e3;
  };
  const std::uint64_t id = ((1 * R + 0) * R + 0) * R + 1;
  std::iter_swap(h1.begin(), std::find(h1.begin(), h1.end(), id));
  std::vector<std::uint64_t> reps;
  for (std::uint64_t x : h1) {
    if (gamma1t_label_.count(x)) continue;
    int label = static_cast<int>(reps.size());
    reps.push_back(x);
    for (std::uint64_t y : h) gamma1t_label_[mul(y, x)] = label;
  }
  const OrientedEdge e_pi = act(w_, standard_edge(*f_, 0));
  for (std::uint64_t x : reps) {
    int c[4];
    decode(x, c);
    Mat2 res{residues_[c[0]], residues_[c[1]], residues_[c[2]], residues_[c[3]]};
    Mat2 y = lift_sl2(res, m_);
    if (!member_gamma1t(y)) throw InternalError("coset representative outside Gamma_1(t)");
    coset_reps_.push_back(y);
    basis_edges_.push_back(act(y, e_pi));
  }
}

int QuotientData::coset_of(const Mat2& g) const {
  auto it = gamma1t_label_.find(key(g));
  if (it == gamma1t_label_.end()) throw InternalError("element is not in Gamma_1(t): " + g.str());
  return it->second;
}

std::vector<Mat2> QuotientData::hecke_cosets(const Poly& q) const {
  if (!is_irreducible(q)) throw ConfigError("Hecke operators are only supported at irreducible Q (got " + q.str() + ")");
  const Field& f = *f_;
  std::vector<Mat2> out;
  for (const Poly& beta : polys_below_degree(f, q.degree()))
    out.push_back({Poly::constant(f, 1), beta, Poly(f), q});
  if (!(m_ % q).is_zero()) {
    ExtGcd eg = ext_gcd(q, m_);
    Poly R = eg.x, S = -eg.y;
    out.push_back({R * q, S, m_ * q, q});
  }
  return out;
}

Mat2 QuotientData::eta(Fq lambda) const {
  const Field& f = *f_;
  if (lambda == 0) throw std::invalid_argument("eta needs a unit");
  Poly li = Poly::constant(f, f.inv(lambda)), l = Poly::constant(f, lambda);
  Mat2 res;
  if (level_.n.degree() == 0) {
    res = {li, Poly(f), Poly(f), l};
  } else {
    ExtGcd eg = ext_gcd(level_.n, tr_);  // x n + y t^r = 1
    Poly e_n = eg.y * tr_, e_t = eg.x * level_.n;  // idempotents
    res = {(e_n + li * e_t) % m_, Poly(f), Poly(f), (e_n + l * e_t) % m_};
  }
  return lift_sl2(res, m_);
}

void QuotientData::build_orbits() const {
  if (orbits_built_) return;
  const Field& f = *f_;
  const std::uint64_t R = static_cast<std::uint64_t>(rsz_);
  auto decode = [&](std::uint64_t k, int out[4]) {
    for (int i = 3; i >= 0; --i) {
      out[i] = static_cast<int>(k % R);
      k /= R;
    }
  };
  auto mul = [&](std::uint64_t x, std::uint64_t y) {
    int a[4], b[4];
    decode(x, a);
    decode(y, b);
    auto mm = [&](int i, int j) { return mul_[i * rsz_ + j]; };
    auto ad = [&](int i, int j) { return add_[i * rsz_ + j]; };
    std::uint64_t e0 = ad(mm(a[0], b[0]), mm(a[1], b[2]));
    std::uint64_t e1 = ad(mm(a[0], b[1]), mm(a[1], b[3]));
    std::uint64_t e2 = ad(mm(a[2], b[0]), mm(a[3], b[2]));
    std::uint64_t e3 = ad(mm(a[2], b[1]), mm(a[3], b[3]));
    return ((e0 * R + e1) * R + e2) * R + e3;
  };
  std::vector<std::uint64_t> h;
  for (int a = 0; a < rsz_; ++a)
    for (int b = 0; b < rsz_; ++b)
      for (int c = 0; c < rsz_; ++c) {
        int bc = mul_[b * rsz_ + c];
        for (int d = 0; d < rsz_; ++d) {
          if (sub_[mul_[a * rsz_ + d] * rsz_ + bc] != 1) continue;
          std::uint64_t k = ((a * R + b) * R + c) * R + d;
          elements_.push_back(k);
          if (member_residue(k)) h.push_back(k);
        }
      }
  for (std::uint64_t x : elements_) {
    if (label_.count(x)) continue;
    int lab = static_cast<int>(label_rep_.size());
    label_rep_.push_back(x);
    for (std::uint64_t y : h) label_[mul(y, x)] = lab;
  }
  const int nlabels = static_cast<int>(label_rep_.size());
  auto lift_key = [&](std::uint64_t k) {
    int c[4];
    decode(k, c);
    return lift_sl2(Mat2{residues_[c[0]], residues_[c[1]], residues_[c[2]], residues_[c[3]]}, m_);
  };

  auto orbits = [&](const std::vector<Mat2>& stab, std::vector<int>& orbit_of, std::vector<char>& stable,
                    std::vector<int>& rep) {
    std::vector<std::uint64_t> sk;
    for (const auto& s : stab) sk.push_back(key(s));
    const std::uint64_t id = key(Mat2::identity(f));
    orbit_of.assign(nlabels, -1);
    for (int lab = 0; lab < nlabels; ++lab) {
      if (orbit_of[lab] >= 0) continue;
      int o = static_cast<int>(rep.size());
      rep.push_back(lab);
      bool st = true;
      for (std::uint64_t s : sk) {
        int l2 = label_.at(mul(label_rep_[lab], s));
        orbit_of[l2] = o;
        if (l2 == lab && s != id) st = false;
      }
      stable.push_back(st);
    }
  };

  edge_orbit_.resize(deg_m_);
  vertex_orbit_.resize(deg_m_);
  edge_orbit_stable_.resize(deg_m_);
  vertex_orbit_stable_.resize(deg_m_);
  edge_orbit_rep_.resize(deg_m_);
  edge_orbit_lambda_.resize(deg_m_);
  for (int i = 0; i < deg_m_; ++i) {
    std::vector<int> vrep;
    orbits(std_edge_stabilizer(f, i), edge_orbit_[i], edge_orbit_stable_[i], edge_orbit_rep_[i]);
    orbits(std_vertex_stabilizer(f, i), vertex_orbit_[i], vertex_orbit_stable_[i], vrep);
    edge_orbit_lambda_[i].assign(edge_orbit_rep_[i].size(), -1);
    for (size_t o = 0; o < edge_orbit_rep_[i].size(); ++o) {
      if (!edge_orbit_stable_[i][o]) continue;
      edge_orbit_lambda_[i][o] = static_cast<int>(lambda1_.size());
      lambda1_.push_back({i, lift_key(label_rep_[edge_orbit_rep_[i][o]]), static_cast<int>(o)});
    }
    for (size_t o = 0; o < vrep.size(); ++o)
      if (vertex_orbit_stable_[i][o])
        stable_vertices_.push_back({i, lift_key(label_rep_[vrep[o]]), static_cast<int>(o)});
  }
  orbits_built_ = true;
}

const std::vector<StableCell>& QuotientData::lambda1() const {
  build_orbits();
  return lambda1_;
}

const std::vector<StableCell>& QuotientData::stable_vertices() const {
  build_orbits();
  return stable_vertices_;
}

bool QuotientData::is_stable(const OrientedEdge& e) const {
  build_orbits();
  EdgeReduction r = reduce_edge(*f_, e);
  if (r.i >= deg_m_) return false;
  int lab = label_.at(key(r.g.adjugate()));
  return edge_orbit_stable_[r.i][edge_orbit_[r.i][lab]];
}

bool QuotientData::is_stable(const TreeVertex& v) const {
  build_orbits();
  VertexReduction r = reduce_vertex(*f_, v);
  if (r.i >= deg_m_) return false;
  int lab = label_.at(key(r.g.adjugate()));
  return vertex_orbit_stable_[r.i][vertex_orbit_[r.i][lab]];
}

EdgeClass QuotientData::edge_class(const OrientedEdge& e) const {
  build_orbits();
  EdgeReduction r = reduce_edge(*f_, e);
  if (r.i >= deg_m_) throw std::invalid_argument("edge is not Gamma-stable: " + e.str());
  Mat2 h = r.g.adjugate();
  int o = edge_orbit_[r.i][label_.at(key(h))];
  int rep = edge_orbit_lambda_[r.i][o];
  if (rep < 0) throw std::invalid_argument("edge is not Gamma-stable: " + e.str());
  const Mat2& ho = lambda1_[rep].h;
  for (const Mat2& s : std_edge_stabilizer(*f_, r.i)) {
    Mat2 g = ho * s * r.g;  // ho s h^{-1}
    if (member(g)) return {rep, r.sign, g};
  }
  throw InternalError("edge class lookup failed");
}

TreeVertex QuotientData::cusp_direction(const TreeVertex& v) const {
  VertexReduction r = reduce_vertex(*f_, v);
  Mat2 h = r.g.adjugate();
  if (r.i >= 1) return act(h, standard_vertex(*f_, r.i + 1));
  std::vector<Mat2> fixers;
  for (const Mat2& s : sl2_fq(*f_))
    if (!(s == Mat2::identity(*f_)) && member(h * s * r.g)) fixers.push_back(s);
  if (fixers.empty()) throw std::invalid_argument("vertex is Gamma-stable: " + v.str());
  std::vector<TreeVertex> fixed;
  for (const TreeVertex& w : neighbors(*f_, standard_vertex(*f_, 0))) {
    bool ok = true;
    for (const Mat2& s : fixers) ok = ok && act(s, w) == w;
    if (ok) fixed.push_back(w);
  }
  if (fixed.size() != 1) throw InternalError("unstable vertex without a unique cusp direction");
  return act(h, fixed.front());
}

}  // namespace drinfeld
