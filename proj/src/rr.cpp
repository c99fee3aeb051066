#include "adelic/rr.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace adelic {

namespace {

// --- truncated power series in the local uniformizer (lead index 0) ------

using Series = std::vector<FieldElement>;  // coefficients c[0..prec-1]

Series series_zero(const FieldSpecPtr& spec, std::size_t prec) {
  return Series(prec, FieldElement::zero(spec));
}

Series series_mul(const Series& a, const Series& b, std::size_t prec) {
  Series out = series_zero(a.empty() ? b[0].spec() : a[0].spec(), prec);
  for (std::size_t i = 0; i < a.size() && i < prec; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j + i < prec && j < b.size(); ++j)
      out[i + j] = out[i + j] + a[i] * b[j];
  }
  return out;
}

Series series_add(const Series& a, const Series& b) {
  Series out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b[i];
  return out;
}

// expansion of x and y at an affine place, to the given precision
struct AffineExpansion {
  Series x, y;
};

AffineExpansion expand_xy(const CurveModel& curve, const FieldElement& x0, const FieldElement& y0,
                          std::size_t prec) {
  const auto& spec = curve.base();
  AffineExpansion e;
  if (prec == 0) prec = 1;
  if (!y0.is_zero()) {
    // uniformizer u = x - x0
    e.x = series_zero(spec, prec);
    e.x[0] = x0;
    if (prec > 1) e.x[1] = FieldElement::one(spec);
    // y = sqrt(phi(x0 + u)) with y(0) = y0, by direct coefficient recursion
    Polynomial v = curve.rhs_poly().shift(x0);  // phi(x0 + u)
    Series y = series_zero(spec, prec);
    y[0] = y0;
    FieldElement inv2y0 = (y0 + y0).inverse();
    for (std::size_t k = 1; k < prec; ++k) {
      FieldElement vk = k < v.coeffs().size() ? v.coeffs()[k] : FieldElement::zero(spec);
      FieldElement inner = FieldElement::zero(spec);
      for (std::size_t i = 1; i < k; ++i) inner = inner + y[i] * y[k - i];
      y[k] = (vk - inner) * inv2y0;
    }
    e.y = std::move(y);
  } else {
    // uniformizer u = y; solve phi(x0 + s) = u^2 for s with s(0) = 0
    Polynomial d = curve.rhs_poly().shift(x0);  // d1 s + d2 s^2 + d3 s^3 (d0 = 0)
    FieldElement inv_d1 = d.coeff(1).inverse();
    Series s = series_zero(spec, prec);
    Series u2 = series_zero(spec, prec);
    if (prec > 2) u2[2] = FieldElement::one(spec);
    for (std::size_t it = 0; it + 1 < prec; ++it) {
      Series s2 = series_mul(s, s, prec);
      Series s3 = series_mul(s2, s, prec);
      Series rhs = u2;
      for (std::size_t i = 0; i < prec; ++i)
        rhs[i] = (rhs[i] - d.coeff(2) * s2[i] - d.coeff(3) * s3[i]) * inv_d1;
      if (rhs == s) break;
      s = std::move(rhs);
    }
    e.x = series_zero(spec, prec);
    e.x[0] = x0;
    e.x = series_add(e.x, s);
    e.y = series_zero(spec, prec);
    if (prec > 1) e.y[1] = FieldElement::one(spec);
  }
  return e;
}

// series of a polynomial in x composed with the expansion of x
Series expand_poly(const Polynomial& g, const Series& xs, std::size_t prec) {
  const auto& spec = g.spec();
  Series acc = series_zero(spec, prec);
  for (std::size_t i = g.coeffs().size(); i-- > 0;) {
    acc = series_mul(acc, xs, prec);
    acc[0] = acc[0] + g.coeffs()[i];
  }
  return acc;
}

struct LinearSystem {
  // rows of constraints over the base field; unknowns are the coefficients
  // a_0..a_A, b_0..b_B of the numerator pair a(x) + b(x) y
  std::vector<std::vector<FieldElement>> rows;
};

// reduced row echelon form; returns pivot column of each row
std::vector<std::size_t> rref(std::vector<std::vector<FieldElement>>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t ncols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    FieldElement inv = m[row][col].inverse();
    for (auto& v : m[row]) v = v * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      FieldElement f = m[r][col];
      for (std::size_t cidx = 0; cidx < ncols; ++cidx) m[r][cidx] = m[r][cidx] - f * m[row][cidx];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// kernel basis of the constraint matrix (RREF + free-variable sweep)
std::vector<std::vector<FieldElement>> kernel_basis(std::vector<std::vector<FieldElement>> m,
                                                    std::size_t ncols, const FieldSpecPtr& spec) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FieldElement>> out;
  for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<FieldElement> v(ncols, FieldElement::zero(spec));
    v[free_col] = FieldElement::one(spec);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m[r][free_col];
    out.push_back(std::move(v));
  }
  return out;
}

RiemannRochResult rr_line(const Divisor& D, const CurveModel& curve) {
  const auto& base = curve.base();
  RiemannRochResult res;
  std::int64_t degD = D.degree();
  res.h0 = std::max<std::int64_t>(0, degD + 1);
  res.h1 = std::max<std::int64_t>(0, -degD - 1);
  if (res.h0 == 0) return res;
  Polynomial p_num = Polynomial::constant(FieldElement::one(base));
  Polynomial q_den = p_num;
  for (const auto& [x, c] : D.terms()) {
    if (x.kind() != Place::Kind::LineFinite) continue;
    if (c > 0)
      q_den = q_den * x.pi().pow(static_cast<std::uint64_t>(c));
    else
      p_num = p_num * x.pi().pow(static_cast<std::uint64_t>(-c));
  }
  Polynomial t = Polynomial::monomial(FieldElement::one(base), 1);
  Polynomial tj = Polynomial::constant(FieldElement::one(base));
  for (std::int64_t j = 0; j <= degD; ++j) {
    res.basis.push_back(CurveFunction::line(curve, p_num * tj, q_den));
    tj = tj * t;
  }
  return res;
}

// h0 and basis of L(D) on an elliptic curve by linear algebra over a fixed
// common denominator
RiemannRochResult rr_elliptic_h0(const Divisor& D, const CurveModel& curve) {
  const auto& base = curve.base();
  RiemannRochResult res;

  // group affine support points by x-coordinate
  struct Above {
    std::vector<Place> places;  // one or two places over this x0
    std::int64_t k = 0;         // multiplicity of (x - x0) in the denominator
  };
  std::map<std::uint64_t, Above> columns;  // keyed by x0.value() for determinism
  for (const auto& [x, c] : D.terms()) {
    if (x.kind() != Place::Kind::EcAffine) continue;
    auto& col = columns[x.x0().value()];
    col.places.push_back(x);
  }
  Polynomial c_den = Polynomial::constant(FieldElement::one(base));
  for (auto& [xv, col] : columns) {
    FieldElement x0 = FieldElement::from_value(base, xv);
    // ensure the conjugate place is constrained as well
    const Place& first = col.places.front();
    if (!first.y0().is_zero()) {
      Place conj = Place::ec_affine(curve, x0, -first.y0());
      bool seen = false;
      for (const auto& pl : col.places) seen = seen || pl == conj;
      if (!seen) col.places.push_back(conj);
    }
    for (const auto& pl : col.places) {
      std::int64_t need = pl.y0().is_zero() ? (D.coeff(pl) + 1) / 2 : D.coeff(pl);
      col.k = std::max(col.k, need);
    }
    if (col.k > 0) {
      Polynomial lin(base, {-x0, FieldElement::one(base)});
      c_den = c_den * lin.pow(static_cast<std::uint64_t>(col.k));
    }
  }

  const std::int64_t nO = D.coeff(Place::ec_origin(base));
  const std::int64_t slack = nO + 2 * c_den.degree();
  const std::int64_t A = slack >= 0 ? slack / 2 : -1;                    // deg bound for a(x)
  const std::int64_t B = slack >= 3 ? (slack - 3) / 2 : -1;              // deg bound for b(x)
  const std::size_t na = static_cast<std::size_t>(A + 1);
  const std::size_t nb = static_cast<std::size_t>(B + 1);
  const std::size_t ncols = na + nb;
  res.h0 = 0;
  if (ncols == 0) return res;

  std::vector<std::vector<FieldElement>> rows;
  for (const auto& [xv, col] : columns) {
    for (const auto& pl : col.places) {
      std::int64_t e = pl.y0().is_zero() ? 2 : 1;
      std::int64_t r = col.k * e - D.coeff(pl);  // required order of a + b y at pl
      if (r <= 0) continue;
      auto prec = static_cast<std::size_t>(r);
      AffineExpansion exp = expand_xy(curve, pl.x0(), pl.y0(), prec);
      // series of the monomials x^i and x^i y
      std::vector<Series> mono(ncols);
      Series xi = series_zero(base, prec);
      xi[0] = FieldElement::one(base);
      for (std::size_t i = 0; i < na; ++i) {
        mono[i] = xi;
        xi = series_mul(xi, exp.x, prec);
      }
      if (nb > 0) {
        Series xiy = exp.y;
        for (std::size_t i = 0; i < nb; ++i) {
          mono[na + i] = xiy;
          xiy = series_mul(xiy, exp.x, prec);
        }
      }
      for (std::size_t j = 0; j < prec; ++j) {
        std::vector<FieldElement> row;
        row.reserve(ncols);
        for (std::size_t cidx = 0; cidx < ncols; ++cidx) row.push_back(mono[cidx][j]);
        rows.push_back(std::move(row));
      }
    }
  }

  auto ker = kernel_basis(std::move(rows), ncols, base);
  res.h0 = static_cast<std::int64_t>(ker.size());
  for (const auto& v : ker) {
    std::vector<FieldElement> ac(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(na));
    std::vector<FieldElement> bc(v.begin() + static_cast<std::ptrdiff_t>(na), v.end());
    res.basis.push_back(CurveFunction::elliptic(curve, Polynomial(base, std::move(ac)),
                                                Polynomial(base, std::move(bc)), c_den));
  }
  return res;
}

}  // namespace

RiemannRochResult riemann_roch(const Divisor& D, const CurveModel& curve) {
  RiemannRochResult res;
  if (curve.kind() == CurveKind::ProjectiveLine) {
    res = rr_line(D, curve);
  } else {
    res = rr_elliptic_h0(D, curve);
    res.h1 = rr_elliptic_h0(-D, curve).h0;
  }
  if (res.h0 - res.h1 != D.degree() + 1 - curve.genus())
    throw InternalError("Riemann-Roch dimension mismatch: h0=" + std::to_string(res.h0) +
                        " h1=" + std::to_string(res.h1) + " deg=" + std::to_string(D.degree()));
  return res;
}

std::optional<CurveFunction> certify_m_torsion(const Divisor& D, std::int64_t m,
                                               const CurveModel& curve) {
  if (D.degree() != 0) throw DomainError("m-torsion certification requires a degree-zero divisor");
  if (m < 1) throw DomainError("m must be >= 1");
  if (static_cast<std::uint64_t>(m) % curve.base()->p == 0)
    throw DomainError("m = " + std::to_string(m) + " is not coprime to the characteristic " +
                      std::to_string(curve.base()->p));
  auto rr = riemann_roch(-(D * m), curve);
  if (rr.h0 == 0) return std::nullopt;
  if (rr.h0 != 1) throw InternalError("degree-zero divisor with h0 > 1");
  CurveFunction f = rr.basis.front();
  f = f * leading_coeff_at_base(f).inverse();
  if (divisor_of(f) != D * m) throw InternalError("certified function has the wrong divisor");
  return f;
}

}  // namespace adelic
