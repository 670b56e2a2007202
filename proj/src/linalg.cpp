// Exact null spaces: sparse Gauss-Jordan over Q and F_p, and a fraction-free
// Hermite reduction for the integer kernel lattice.

#include <algorithm>
#include <map>

#include "kpalg/ring.hpp"

namespace kpalg {

namespace {

/// Scalar operations of the fraction field of a RingSpec (Q for Z).
class Field {
 public:
  explicit Field(const RingSpec& spec) : prime_(spec.kind() == RingKind::PrimeField) {
    if (prime_) {
      std::uint64_t p = spec.modulus();
      mpz_import(p_.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    }
  }

  mpq_class norm(mpq_class v) const {
    if (!prime_) {
      v.canonicalize();
      return v;
    }
    mpz_class den = v.get_den();
    mpz_class r = v.get_num();
    if (den != 1) {
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p_.get_mpz_t());
      r *= inv;
    }
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), p_.get_mpz_t());
    return mpq_class(r);
  }

  mpq_class inv(const mpq_class& v) const { return norm(mpq_class(1) / v); }

 private:
  bool prime_;
  mpz_class p_;
};

using WorkRow = std::map<std::size_t, mpq_class>;

/// Reduced row echelon form of the row space; returns pivot rows keyed by
/// pivot column, each with leading coefficient 1 and zeros in every other
/// pivot column.
std::map<std::size_t, WorkRow> rref(const Field& f, const std::vector<SparseRow>& rows) {
  std::map<std::size_t, WorkRow> pivots;
  for (const auto& input : rows) {
    WorkRow work;
    for (const auto& [c, v] : input) {
      mpq_class x = f.norm(v);
      if (sgn(x) != 0) work[c] = x;
    }
    auto it = work.begin();
    while (it != work.end()) {
      auto p = pivots.find(it->first);
      if (p == pivots.end()) {
        ++it;
        continue;
      }
      const std::size_t col = it->first;
      const mpq_class factor = it->second;
      for (const auto& [c, v] : p->second) {
        mpq_class x = f.norm(work[c] - factor * v);
        if (sgn(x) == 0) {
          work.erase(c);
        } else {
          work[c] = x;
        }
      }
      it = work.upper_bound(col);
    }
    if (work.empty()) continue;
    const std::size_t lead = work.begin()->first;
    const mpq_class scale = f.inv(work.begin()->second);
    for (auto& [c, v] : work) v = f.norm(v * scale);
    pivots.emplace(lead, std::move(work));
  }
  // Back substitution, highest pivot first.
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const std::size_t col = it->first;
    const WorkRow& prow = it->second;
    for (auto jt = pivots.begin(); jt->first < col; ++jt) {
      WorkRow& row = jt->second;
      auto hit = row.find(col);
      if (hit == row.end()) continue;
      const mpq_class factor = hit->second;
      for (const auto& [c, v] : prow) {
        mpq_class x = f.norm(row[c] - factor * v);
        if (sgn(x) == 0) {
          row.erase(c);
        } else {
          row[c] = x;
        }
      }
    }
  }
  return pivots;
}

std::vector<std::vector<mpq_class>> field_kernel(const Field& f, std::size_t cols,
                                                 const std::vector<SparseRow>& rows) {
  auto pivots = rref(f, rows);
  std::vector<SparseRow> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivots.count(free)) continue;
    SparseRow v;
    for (const auto& [pc, prow] : pivots) {
      auto hit = prow.find(free);
      if (hit != prow.end()) v.emplace_back(pc, f.norm(-hit->second));
    }
    v.emplace_back(free, mpq_class(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  // Canonical basis: the reduced echelon form of the kernel itself.
  auto reduced = rref(f, basis);
  std::vector<std::vector<mpq_class>> out;
  for (const auto& [pc, row] : reduced) {
    std::vector<mpq_class> dense(cols, mpq_class(0));
    for (const auto& [c, v] : row) dense[c] = v;
    out.push_back(std::move(dense));
  }
  return out;
}

using IntRow = std::vector<mpz_class>;

/// Row Hermite normal form in place: echelon over the first `span` columns,
/// positive pivots, entries above each pivot reduced into [0, pivot).
/// Returns the number of nonzero rows (in the first `span` columns).
std::size_t hermite(std::vector<IntRow>& a, std::size_t span) {
  std::size_t pr = 0;
  for (std::size_t col = 0; col < span && pr < a.size(); ++col) {
    while (true) {
      std::size_t best = a.size();
      for (std::size_t i = pr; i < a.size(); ++i) {
        if (a[i][col] == 0) continue;
        if (best == a.size() || abs(a[i][col]) < abs(a[best][col])) best = i;
      }
      if (best == a.size()) break;
      std::swap(a[pr], a[best]);
      bool clean = true;
      for (std::size_t i = pr + 1; i < a.size(); ++i) {
        if (a[i][col] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[pr][col].get_mpz_t());
        for (std::size_t c = col; c < a[i].size(); ++c) a[i][c] -= q * a[pr][c];
        if (a[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[pr][col] == 0) continue;
    if (a[pr][col] < 0) {
      for (auto& x : a[pr]) x = -x;
    }
    for (std::size_t i = 0; i < pr; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[pr][col].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t c = col; c < a[i].size(); ++c) a[i][c] -= q * a[pr][c];
    }
    ++pr;
  }
  return pr;
}

std::vector<std::vector<mpq_class>> integer_kernel(std::size_t cols,
                                                   const std::vector<SparseRow>& rows) {
  // ker_Z(M) = ker_Q(M) ∩ Z^n depends only on the rational row space, so
  // shrink M to its rank-many RREF rows first.
  Field q(RingSpec::rationals());
  auto pivots = rref(q, rows);
  const std::size_t r = pivots.size();

  // [A^T | I], rows indexed by unknowns. Integer row operations bring A^T to
  // echelon form; the identity part of the rows that vanish spans the kernel.
  std::vector<IntRow> work(cols, IntRow(r + cols, mpz_class(0)));
  std::size_t j = 0;
  for (const auto& [pc, row] : pivots) {
    mpz_class lcm = 1;
    for (const auto& [c, v] : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    for (const auto& [c, v] : row) {
      mpq_class scaled = v * lcm;
      work[c][j] = scaled.get_num();
    }
    ++j;
  }
  for (std::size_t i = 0; i < cols; ++i) work[i][r + i] = 1;
  std::size_t nonzero = hermite(work, r);

  std::vector<IntRow> lattice;
  for (std::size_t i = nonzero; i < cols; ++i) {
    lattice.emplace_back(work[i].begin() + static_cast<std::ptrdiff_t>(r), work[i].end());
  }
  hermite(lattice, cols);

  std::vector<std::vector<mpq_class>> out;
  for (auto& row : lattice) {
    mpz_class content = 0;
    for (const auto& x : row) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    if (content == 0) continue;
    std::vector<mpq_class> dense;
    dense.reserve(cols);
    for (const auto& x : row) dense.emplace_back(x / content);
    out.push_back(std::move(dense));
  }
  return out;
}

}  // namespace

std::vector<Vector> kernel(RingSpec spec, std::size_t cols, const std::vector<SparseRow>& rows) {
  std::vector<std::vector<mpq_class>> raw =
      spec.kind() == RingKind::Integers ? integer_kernel(cols, rows) : field_kernel(Field(spec), cols, rows);
  std::vector<Vector> out;
  out.reserve(raw.size());
  for (const auto& v : raw) {
    Vector vec;
    vec.reserve(cols);
    for (const auto& x : v) vec.push_back(RingValue::from_rational(spec, x));
    out.push_back(std::move(vec));
  }
  return out;
}

std::vector<Vector> kernel(const Matrix& m) {
  std::vector<SparseRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseRow row;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m.at(r, c).is_zero()) row.emplace_back(c, m.at(r, c).value());
    }
    rows.push_back(std::move(row));
  }
  return kernel(m.spec(), m.cols(), rows);
}

std::size_t rank(const Matrix& m) {
  std::vector<SparseRow> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseRow row;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m.at(r, c).is_zero()) row.emplace_back(c, m.at(r, c).value());
    }
    rows.push_back(std::move(row));
  }
  RingSpec field = m.spec().kind() == RingKind::PrimeField ? m.spec() : RingSpec::rationals();
  return rref(Field(field), rows).size();
}

}  // namespace kpalg
