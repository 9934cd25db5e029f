#include "strpoly/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

namespace strpoly {

std::string coords_name(Coords c) {
  switch (c) {
    case Coords::T: return "t";
    case Coords::M: return "m";
    default: return "none";
  }
}

Coords parse_coords(const std::string& s) {
  if (s == "t") return Coords::T;
  if (s == "m") return Coords::M;
  throw Error("BadCoords", "coordinate system must be 't' or 'm', got '" + s + "'");
}

void HPolytope::add_row(const IntVec& a, long b_value, std::string tag) {
  QVec qa(a.begin(), a.end());
  add_row(std::move(qa), Q(b_value), std::move(tag));
}

void HPolytope::add_row(QVec a, Q b_value, std::string tag) {
  if (static_cast<int>(a.size()) != d) throw Error("BadRow", "row length differs from the dimension");
  if (std::all_of(a.begin(), a.end(), [](const Q& x) { return x == 0; }))
    throw Error("BadRow", "zero row in H-representation");
  A.push_back(std::move(a));
  b.push_back(std::move(b_value));
  row_tags.push_back(std::move(tag));
}

bool HPolytope::contains(const QVec& x) const {
  for (int r = 0; r < rows(); ++r) {
    Q s = b[r];
    for (int i = 0; i < d; ++i) s += A[r][i] * x[i];
    if (s < 0) return false;
  }
  return true;
}

bool HPolytope::contains(const IntVec& x) const { return contains(QVec(x.begin(), x.end())); }

namespace {

// Incrementally maintained reduced row echelon form of [a | b] rows.
struct Echelon {
  int d = 0;
  std::vector<QVec> rows;   // each of length d+1
  std::vector<int> pivots;

  // Returns false (leaving the state untouched) if the row is dependent.
  bool insert(const QVec& a, const Q& bb) {
    QVec r(a);
    r.push_back(bb);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Q f = r[pivots[i]];
      if (f != 0)
        for (int c = 0; c <= d; ++c) r[c] -= f * rows[i][c];
    }
    int p = -1;
    for (int c = 0; c < d; ++c)
      if (r[c] != 0) {
        p = c;
        break;
      }
    if (p < 0) return false;
    const Q inv = 1 / r[p];
    for (int c = 0; c <= d; ++c) r[c] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Q f = rows[i][p];
      if (f != 0)
        for (int c = 0; c <= d; ++c) rows[i][c] -= f * r[c];
    }
    rows.push_back(std::move(r));
    pivots.push_back(p);
    return true;
  }

  // Solution of a x + b = 0 for a full-rank state.
  QVec solve() const {
    QVec x(d);
    for (std::size_t i = 0; i < rows.size(); ++i) x[pivots[i]] = -rows[i][d];
    return x;
  }
};

}  // namespace

VertexSet vertices(const HPolytope& p, EnumerationCaps caps) {
  if (p.d > caps.max_dim || p.rows() > caps.max_rows)
    throw Error("DimensionCapExceeded", "vertex enumeration capped at d <= " + std::to_string(caps.max_dim) +
                                            " and m <= " + std::to_string(caps.max_rows) + " (got d = " +
                                            std::to_string(p.d) + ", m = " + std::to_string(p.rows()) + ")");
  std::set<QVec> found;
  if (p.d == 0) {
    found.insert(QVec{});
  } else {
    const int m = p.rows();
    std::function<void(int, const Echelon&)> rec = [&](int start, const Echelon& e) {
      if (static_cast<int>(e.rows.size()) == p.d) {
        QVec x = e.solve();
        if (p.contains(x)) found.insert(std::move(x));
        return;
      }
      const int need = p.d - static_cast<int>(e.rows.size());
      for (int r = start; r <= m - need; ++r) {
        Echelon next = e;
        if (next.insert(p.A[r], p.b[r])) rec(r + 1, next);
      }
    };
    Echelon e;
    e.d = p.d;
    rec(0, e);
  }
  if (found.empty()) throw Error("NoVertices", "the system has no vertex (empty or unbounded)");
  VertexSet vs;
  vs.vertices.assign(found.begin(), found.end());
  vs.integral = is_integral(vs);
  return vs;
}

bool is_integral(const VertexSet& vs) {
  for (const QVec& v : vs.vertices)
    for (const Q& x : v)
      if (x.get_den() != 1) return false;
  return true;
}

bool is_integral(const HPolytope& p, EnumerationCaps caps) { return vertices(p, caps).integral; }

int rank_of(std::vector<QVec> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][c] != 0) {
        piv = static_cast<int>(r);
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Q f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

int affine_dimension(const std::vector<QVec>& pts) {
  if (pts.empty()) return -1;
  std::vector<QVec> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    QVec v(pts[i]);
    for (std::size_t c = 0; c < v.size(); ++c) v[c] -= pts[0][c];
    diffs.push_back(std::move(v));
  }
  return rank_of(std::move(diffs));
}

FacetReport facet_report(const HPolytope& p, const VertexSet& vs) {
  FacetReport rep;
  rep.dimension = affine_dimension(vs.vertices);
  for (int r = 0; r < p.rows(); ++r) {
    std::vector<QVec> tight;
    for (const QVec& v : vs.vertices) {
      Q s = p.b[r];
      for (int i = 0; i < p.d; ++i) s += p.A[r][i] * v[i];
      if (s == 0) tight.push_back(v);
    }
    if (affine_dimension(tight) == rep.dimension - 1)
      rep.facet_rows.push_back(r);
    else
      rep.redundant_rows.push_back(r);
  }
  return rep;
}

IntVec primitive(const IntVec& a) {
  int g = 0;
  for (int x : a) g = std::gcd(g, std::abs(x));
  IntVec out(a);
  if (g > 1)
    for (int& x : out) x /= g;
  return out;
}

IntVec primitive_normal(const QVec& a) {
  mpz_class l = 1;
  for (const Q& x : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const Q& x : a) {
    mpz_class v = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  IntVec out;
  for (auto& v : ints) out.push_back(static_cast<int>(mpz_class(v / g).get_si()));
  return out;
}

LatticePoints lattice_points(const HPolytope& p, bool collect, long long box_cap, EnumerationCaps caps) {
  LatticePoints lp;
  if (p.d == 0) {
    lp.count = 1;
    if (collect) lp.points.push_back({});
    return lp;
  }
  VertexSet vs = vertices(p, caps);
  std::vector<long> lo(p.d), hi(p.d);
  long double volume = 1;
  for (int i = 0; i < p.d; ++i) {
    Q mn = vs.vertices[0][i], mx = vs.vertices[0][i];
    for (const QVec& v : vs.vertices) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    mpz_class f, c;
    mpz_fdiv_q(f.get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
    mpz_cdiv_q(c.get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
    lo[i] = f.get_si();
    hi[i] = c.get_si();
    volume *= static_cast<long double>(hi[i] - lo[i] + 1);
  }
  if (volume > static_cast<long double>(box_cap))
    throw Error("BoxCapExceeded", "bounding box exceeds " + std::to_string(box_cap) + " candidate points");

  // Assign coordinates from the last to the first; a row is checked as
  // soon as its lowest-index non-zero coordinate has been fixed.
  std::vector<std::vector<int>> bucket(p.d);
  std::vector<std::vector<long>> ia(p.rows());
  std::vector<long> ib(p.rows());
  for (int r = 0; r < p.rows(); ++r) {
    // Scale the row to integers so the inner loop avoids rationals.
    mpz_class l = p.b[r].get_den();
    for (const Q& x : p.A[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (const Q& x : p.A[r]) ia[r].push_back(mpz_class(x.get_num() * (l / x.get_den())).get_si());
    ib[r] = mpz_class(p.b[r].get_num() * (l / p.b[r].get_den())).get_si();
    int first = 0;
    while (ia[r][first] == 0) ++first;
    bucket[first].push_back(r);
  }
  IntVec x(p.d, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos < 0) {
      ++lp.count;
      if (collect) lp.points.push_back(x);
      return;
    }
    for (long v = lo[pos]; v <= hi[pos]; ++v) {
      x[pos] = static_cast<int>(v);
      bool ok = true;
      for (int r : bucket[pos]) {
        long s = ib[r];
        for (int i = pos; i < p.d; ++i) s += ia[r][i] * x[i];
        if (s < 0) {
          ok = false;
          break;
        }
      }
      if (ok) rec(pos - 1);
    }
    x[pos] = 0;
  };
  rec(p.d - 1);
  if (collect) std::sort(lp.points.begin(), lp.points.end());
  return lp;
}

bool is_reflexive_after_translation(const HPolytope& p, EnumerationCaps caps) {
  VertexSet vs = vertices(p, caps);
  if (!vs.integral) throw Error("NotIntegral", "reflexivity requires an integral polytope");
  if (affine_dimension(vs.vertices) != p.d) return false;
  LatticePoints lp = lattice_points(p, true, 10'000'000, caps);
  std::vector<IntVec> interior;
  for (const IntVec& x : lp.points) {
    bool strict = true;
    for (int r = 0; r < p.rows() && strict; ++r) {
      Q s = p.b[r];
      for (int i = 0; i < p.d; ++i) s += p.A[r][i] * x[i];
      if (s <= 0) strict = false;
    }
    if (strict) interior.push_back(x);
  }
  if (interior.size() != 1) return false;
  const IntVec& c = interior[0];
  FacetReport rep = facet_report(p, vs);
  for (int r : rep.facet_rows) {
    // Scale the row so that its normal is primitive; the facet then has
    // lattice distance (a.c + b) from the interior point.
    IntVec u = primitive_normal(p.A[r]);
    Q scale = 0;
    for (int i = 0; i < p.d; ++i)
      if (p.A[r][i] != 0) {
        scale = Q(u[i]) / p.A[r][i];
        break;
      }
    Q dist = scale * p.b[r];
    for (int i = 0; i < p.d; ++i) dist += Q(u[i]) * c[i];
    if (dist != 1) return false;
  }
  return true;
}

std::string q_to_string(const Q& q) { return q.get_str(); }

Q q_from_string(const std::string& s) {
  Q q;
  if (q.set_str(s, 10) != 0) throw Error("ParseError", "not a rational: '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace strpoly
