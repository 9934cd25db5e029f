#include "strpoly/toric_fan.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_set>

namespace strpoly {

RaySet ray_set(std::initializer_list<int> indices) { return ray_set(std::vector<int>(indices)); }

RaySet ray_set(const std::vector<int>& indices) {
  RaySet s = 0;
  for (int i : indices) {
    if (i < 0 || i >= kMaxRays) throw Error("TooManyRays", "ray index outside [0,64)");
    s |= RaySet{1} << i;
  }
  return s;
}

std::vector<int> ray_members(RaySet s) {
  std::vector<int> out;
  while (s) {
    int i = std::countr_zero(s);
    out.push_back(i);
    s &= s - 1;
  }
  return out;
}

int Fan::find_ray(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  return -1;
}

namespace {

// Unique solution of A x = b (A given by rows) or nullopt when the system
// is inconsistent or underdetermined.
std::optional<QVec> solve_linear(std::vector<QVec> A, QVec b) {
  const std::size_t m = A.size();
  const std::size_t k = m ? A[0].size() : 0;
  for (std::size_t r = 0; r < m; ++r) A[r].push_back(b[r]);
  std::vector<int> pivcol;
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < m; ++c) {
    std::size_t piv = row;
    while (piv < m && A[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(A[row], A[piv]);
    const Q inv = 1 / A[row][c];
    for (std::size_t cc = c; cc <= k; ++cc) A[row][cc] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || A[r][c] == 0) continue;
      const Q f = A[r][c];
      for (std::size_t cc = c; cc <= k; ++cc) A[r][cc] -= f * A[row][cc];
    }
    pivcol.push_back(static_cast<int>(c));
    ++row;
  }
  for (std::size_t r = row; r < m; ++r)
    if (A[r][k] != 0) return std::nullopt;
  if (pivcol.size() != k) return std::nullopt;
  QVec x(k);
  for (std::size_t r = 0; r < pivcol.size(); ++r) x[pivcol[r]] = A[r][k];
  return x;
}

// Coordinates of u with respect to the rays of cone s (nullopt if u is not
// in the linear span).
std::optional<QVec> cone_coordinates(const std::vector<IntVec>& rays, RaySet s, const IntVec& u) {
  std::vector<int> mem = ray_members(s);
  const std::size_t d = u.size();
  std::vector<QVec> A(d, QVec(mem.size()));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t c = 0; c < mem.size(); ++c) A[i][c] = rays[mem[c]][i];
  return solve_linear(A, QVec(u.begin(), u.end()));
}

}  // namespace

bool is_cone_in_fan(const Fan& fan, RaySet s) {
  if (s == 0) return true;
  return std::any_of(fan.max_cones.begin(), fan.max_cones.end(), [&](RaySet c) { return is_subset(s, c); });
}

std::vector<RaySet> primitive_collections(const Fan& fan) {
  const std::size_t total = fan.max_cones.size() << std::min<int>(fan.d, 40);
  if (fan.d > 24 || total > 50'000'000ULL)
    throw Error("ResourceCap", "definitional primitive collections limited to small fans");
  std::unordered_set<RaySet> faces;
  for (RaySet c : fan.max_cones) {
    // Enumerate all subsets of c.
    RaySet sub = c;
    while (true) {
      faces.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & c;
    }
  }
  std::vector<std::vector<RaySet>> by_size(fan.d + 2);
  for (RaySet f : faces) {
    int sz = std::popcount(f);
    if (sz < static_cast<int>(by_size.size())) by_size[sz].push_back(f);
  }
  std::vector<RaySet> pcs;
  const int nr = fan.ray_count();
  for (int r = 0; r < nr; ++r)
    if (!faces.count(RaySet{1} << r)) pcs.push_back(RaySet{1} << r);
  for (int s = 2; s <= fan.d + 1; ++s) {
    for (RaySet f : by_size[s - 1]) {
      int top = 63 - std::countl_zero(f);
      for (int r = top + 1; r < nr; ++r) {
        RaySet cand = f | (RaySet{1} << r);
        if (faces.count(cand)) continue;
        bool minimal = true;
        for (int x : ray_members(cand))
          if (!faces.count(cand & ~(RaySet{1} << x))) {
            minimal = false;
            break;
          }
        if (minimal) pcs.push_back(cand);
      }
    }
  }
  std::sort(pcs.begin(), pcs.end());
  pcs.erase(std::unique(pcs.begin(), pcs.end()), pcs.end());
  return pcs;
}

mpz_class integer_determinant(const std::vector<IntVec>& columns) {
  // Bareiss fraction-free elimination.
  const std::size_t n = columns.size();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = columns[j][i];
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

namespace {

std::vector<IntVec> cone_columns(const std::vector<IntVec>& rays, RaySet s) {
  std::vector<IntVec> cols;
  for (int i : ray_members(s)) cols.push_back(rays[i]);
  return cols;
}

bool unimodular(const std::vector<IntVec>& rays, RaySet s, int d) {
  if (std::popcount(s) != d) return false;
  mpz_class det = integer_determinant(cone_columns(rays, s));
  return det == 1 || det == -1;
}

}  // namespace

Fan star_subdivision(const Fan& fan, RaySet tau, const std::string& label) {
  if (tau == 0 || !is_cone_in_fan(fan, tau)) throw Error("TauNotInFan", "the cone tau is not a cone of the fan");
  if (fan.ray_count() >= kMaxRays) throw Error("TooManyRays", "fan already has 64 rays");
  IntVec u(fan.d, 0);
  for (int i : ray_members(tau)) u = add(u, fan.rays[i]);
  if (std::find(fan.rays.begin(), fan.rays.end(), u) != fan.rays.end())
    throw Error("NonSmoothStar", "the new ray coincides with an existing ray");
  Fan out = fan;
  const int nu = fan.ray_count();
  out.rays.push_back(u);
  out.labels.push_back(label);
  out.max_cones.clear();
  for (RaySet c : fan.max_cones) {
    if (!is_subset(tau, c)) {
      out.max_cones.push_back(c);
      continue;
    }
    if (!unimodular(fan.rays, c, fan.d)) throw Error("NonSmoothStar", "a cone containing tau is not smooth");
    for (int r : ray_members(tau)) out.max_cones.push_back((c & ~(RaySet{1} << r)) | (RaySet{1} << nu));
  }
  std::sort(out.max_cones.begin(), out.max_cones.end());
  return out;
}

std::vector<RaySet> pc_after_star(const std::vector<RaySet>& pcs, RaySet tau, int new_ray) {
  const RaySet ub = RaySet{1} << new_ray;
  std::vector<RaySet> out{tau};
  std::vector<RaySet> cand;
  for (RaySet P : pcs) {
    if (!is_subset(tau, P)) out.push_back(P);
    if (P & tau) cand.push_back((P & ~tau) | ub);
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  for (RaySet c : cand) {
    bool minimal = std::none_of(cand.begin(), cand.end(), [&](RaySet o) { return o != c && is_subset(o, c); });
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Decomposition> locate_in_fan(const Fan& fan, const IntVec& u) {
  for (RaySet c : fan.max_cones) {
    auto x = cone_coordinates(fan.rays, c, u);
    if (!x) continue;
    if (std::any_of(x->begin(), x->end(), [](const Q& q) { return q < 0; })) continue;
    Decomposition dec;
    std::vector<int> mem = ray_members(c);
    for (std::size_t i = 0; i < mem.size(); ++i)
      if ((*x)[i] != 0) dec.emplace_back(mem[i], (*x)[i]);
    return dec;
  }
  return std::nullopt;
}

Q support_value(const Decomposition& dec, const Divisor& D) {
  Q v = 0;
  for (const auto& [r, c] : dec) v -= c * D.coeffs[r];
  return v;
}

Q support_value(const Fan& fan, const Divisor& D, const IntVec& u) {
  auto dec = locate_in_fan(fan, u);
  if (!dec) throw Error("OutsideSupport", "vector is outside the support of the fan");
  return support_value(*dec, D);
}

std::vector<QVec> cartier_data(const Fan& fan, const Divisor& D) {
  std::vector<QVec> out;
  for (RaySet c : fan.max_cones) {
    std::vector<int> mem = ray_members(c);
    std::vector<QVec> A;
    QVec b;
    for (int r : mem) {
      A.emplace_back(fan.rays[r].begin(), fan.rays[r].end());
      b.push_back(Q(-D.coeffs[r]));
    }
    auto m = solve_linear(A, b);
    if (!m) throw Error("SingularCone", "maximal cone is not full-dimensional simplicial");
    out.push_back(*m);
  }
  return out;
}

HPolytope polytope_of_divisor(const Fan& fan, const Divisor& D) {
  HPolytope p;
  p.d = fan.d;
  for (int r = 0; r < fan.ray_count(); ++r)
    p.add_row(fan.rays[r], D.coeffs[r], r < static_cast<int>(fan.labels.size()) ? "ray:" + fan.labels[r] : "ray");
  return p;
}

BpfResult basepoint_free_check(const std::vector<IntVec>& rays, const Divisor& D, const std::vector<RaySet>& pcs,
                               const Locator& locate) {
  BpfResult res;
  for (RaySet P : pcs) {
    const std::vector<int> mem = ray_members(P);
    IntVec s(rays[0].size(), 0);
    BpfViolation v;
    v.collection = P;
    v.rhs = 0;
    for (int r : mem) {
      s = add(s, rays[r]);
      v.rhs_terms.push_back(Q(-D.coeffs[r]));
      v.rhs += v.rhs_terms.back();
    }
    auto dec = locate(s);
    if (!dec) throw Error("OutsideSupport", "sum of a primitive collection is outside the fan");
    v.sum_decomposition = *dec;
    v.lhs = 0;
    for (const auto& [r, c] : *dec) {
      v.lhs_terms.push_back(-c * D.coeffs[r]);
      v.lhs += v.lhs_terms.back();
    }
    if (v.lhs < v.rhs) {
      res.bpf = false;
      res.violations.push_back(std::move(v));
    }
  }
  return res;
}

BpfResult is_basepoint_free(const Fan& fan, const Divisor& D, const std::vector<RaySet>& pcs) {
  return basepoint_free_check(fan.rays, D, pcs, [&](const IntVec& u) { return locate_in_fan(fan, u); });
}

BpfResult is_basepoint_free(const Fan& fan, const Divisor& D) {
  return is_basepoint_free(fan, D, primitive_collections(fan));
}

bool basepoint_free_by_cartier(const Fan& fan, const Divisor& D) {
  HPolytope p = polytope_of_divisor(fan, D);
  for (const QVec& m : cartier_data(fan, D))
    if (!p.contains(m)) return false;
  return true;
}

void check_bott_data(const std::vector<IntVec>& v, const std::vector<IntVec>& w) {
  const std::size_t n = v.size();
  if (w.size() != n) throw Error("NotBottData", "v and w have different numbers of columns");
  for (std::size_t j = 0; j < n; ++j) {
    if (v[j].size() != n || w[j].size() != n) throw Error("NotBottData", "columns must have length n");
    for (std::size_t i = 0; i < j; ++i)
      if (v[j][i] != 0 || w[j][i] != 0) throw Error("NotBottData", "matrices are not lower triangular");
    if (v[j][j] != -1 || w[j][j] != 1) throw Error("NotBottData", "diagonal must be -1 for v and +1 for w");
  }
}

Fan bott_fan(const std::vector<IntVec>& v, const std::vector<IntVec>& w) {
  check_bott_data(v, w);
  const int n = static_cast<int>(v.size());
  if (n > 20) throw Error("ResourceCap", "explicit Bott fans limited to 20 stages");
  Fan f;
  f.d = n;
  for (int j = 0; j < n; ++j) {
    f.rays.push_back(v[j]);
    f.labels.push_back("v" + std::to_string(j + 1));
  }
  for (int j = 0; j < n; ++j) {
    f.rays.push_back(w[j]);
    f.labels.push_back("w" + std::to_string(j + 1));
  }
  const RaySet all = (n == 0) ? 0 : ((RaySet{1} << n) - 1);
  for (RaySet S = 0;; ++S) {
    f.max_cones.push_back(S | ((all & ~S) << n));
    if (S == all) break;
  }
  std::sort(f.max_cones.begin(), f.max_cones.end());
  return f;
}

bool is_smooth(const Fan& fan) {
  return std::all_of(fan.max_cones.begin(), fan.max_cones.end(),
                     [&](RaySet c) { return unimodular(fan.rays, c, fan.d); });
}

bool check_fan_validity(const Fan& fan) {
  const int d = fan.d;
  for (RaySet c : fan.max_cones) {
    if (std::popcount(c) != d) return false;
    if (integer_determinant(cone_columns(fan.rays, c)) == 0) return false;
  }
  // Ridges.
  std::map<RaySet, std::vector<int>> ridge_opposite;
  for (RaySet c : fan.max_cones)
    for (int r : ray_members(c)) ridge_opposite[c & ~(RaySet{1} << r)].push_back(r);
  for (const auto& [ridge, opp] : ridge_opposite) {
    if (opp.size() != 2) return false;
    std::vector<IntVec> cols = cone_columns(fan.rays, ridge);
    cols.push_back(fan.rays[opp[0]]);
    mpz_class d1 = integer_determinant(cols);
    cols.back() = fan.rays[opp[1]];
    mpz_class d2 = integer_determinant(cols);
    if (sgn(d1) * sgn(d2) >= 0) return false;
  }
  // A generic point must be covered exactly once.
  static const int primes[] = {1009, -2003, 3001, -4001, 5003, -6007, 7001, -8009, 9001, -10007, 11003, -12007,
                               13001, -14009, 15013, -16001, 17011, -18013, 19001, -20011, 21001, -22003};
  for (int attempt = 0; attempt < 6; ++attempt) {
    IntVec p(d);
    for (int i = 0; i < d; ++i) p[i] = primes[(i + attempt) % 22] * (1 + attempt * (i + 1));
    int hits = 0;
    bool boundary = false;
    for (RaySet c : fan.max_cones) {
      auto x = cone_coordinates(fan.rays, c, p);
      if (!x) return false;
      bool nonneg = std::all_of(x->begin(), x->end(), [](const Q& q) { return q >= 0; });
      if (!nonneg) continue;
      if (std::any_of(x->begin(), x->end(), [](const Q& q) { return q == 0; })) boundary = true;
      ++hits;
    }
    if (boundary) continue;
    return hits == 1;
  }
  return false;
}

IteratedStarFan::IteratedStarFan(const std::vector<IntVec>& v, const std::vector<IntVec>& w) {
  check_bott_data(v, w);
  const int n = static_cast<int>(v.size());
  if (2 * n > kMaxRays) throw Error("TooManyRays", "Bott tower has more than 64 rays");
  d_ = n;
  v_ = v;
  w_ = w;
  for (int j = 0; j < n; ++j) {
    rays_.push_back(v[j]);
    labels_.push_back("v" + std::to_string(j + 1));
  }
  for (int j = 0; j < n; ++j) {
    rays_.push_back(w[j]);
    labels_.push_back("w" + std::to_string(j + 1));
  }
  for (int j = 0; j < n; ++j) pcs_.push_back(ray_set({j, n + j}));
  std::sort(pcs_.begin(), pcs_.end());
}

bool IteratedStarFan::is_cone(RaySet s) const {
  return std::none_of(pcs_.begin(), pcs_.end(), [&](RaySet P) { return is_subset(P, s); });
}

int IteratedStarFan::star(RaySet tau, const std::string& label) {
  if (tau == 0 || !is_cone(tau)) throw Error("TauNotInFan", "the cone tau is not a cone of the fan");
  if (static_cast<int>(rays_.size()) >= kMaxRays) throw Error("TooManyRays", "fan already has 64 rays");
  IntVec u(d_, 0);
  for (int i : ray_members(tau)) u = add(u, rays_[i]);
  const int idx = static_cast<int>(rays_.size());
  rays_.push_back(u);
  labels_.push_back(label);
  pcs_ = pc_after_star(pcs_, tau, idx);
  stars_.emplace_back(tau, idx);
  return idx;
}

Decomposition IteratedStarFan::locate(const IntVec& u) const {
  // Bott cone: coordinate j is decided by column j alone (triangularity).
  std::map<int, Q> coef;
  QVec res(u.begin(), u.end());
  for (int j = 0; j < d_; ++j) {
    const Q c = res[j];
    if (c == 0) continue;
    const IntVec& col = c > 0 ? w_[j] : v_[j];
    const Q m = c > 0 ? c : Q(-c);
    for (int i = j; i < d_; ++i) res[i] -= m * col[i];
    coef[c > 0 ? d_ + j : j] = m;
  }
  // Each star replaces the minimal coefficient on tau by the new ray.
  for (const auto& [tau, idx] : stars_) {
    std::vector<int> mem = ray_members(tau);
    bool contains = std::all_of(mem.begin(), mem.end(), [&](int r) { return coef.count(r) > 0; });
    if (!contains) continue;
    Q m = coef[mem[0]];
    for (int r : mem) m = std::min(m, coef[r]);
    for (int r : mem) {
      coef[r] -= m;
      if (coef[r] == 0) coef.erase(r);
    }
    coef[idx] = m;
  }
  return Decomposition(coef.begin(), coef.end());
}

Fan IteratedStarFan::materialize() const {
  Fan f = bott_fan(v_, w_);
  for (const auto& [tau, idx] : stars_) f = star_subdivision(f, tau, labels_[idx]);
  f.labels = labels_;
  return f;
}

}  // namespace strpoly
