#include "bqtop/snf.hpp"

#include <stdexcept>
#include <utility>

namespace bqtop {

namespace {

struct Reducer {
  IntMatrix a;
  IntMatrix* u = nullptr;  // row operations applied here
  IntMatrix* v = nullptr;  // column operations applied here

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    if (u != nullptr)
      for (std::size_t c = 0; c < u->cols; ++c) std::swap(u->at(i, c), u->at(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    if (v != nullptr)
      for (std::size_t r = 0; r < v->rows; ++r) std::swap(v->at(r, i), v->at(r, j));
  }
  // row_i += k * row_j
  void add_row(std::size_t i, std::size_t j, const BigInt& k) {
    for (std::size_t c = 0; c < a.cols; ++c) a.at(i, c) += k * a.at(j, c);
    if (u != nullptr)
      for (std::size_t c = 0; c < u->cols; ++c) u->at(i, c) += k * u->at(j, c);
  }
  // col_i += k * col_j
  void add_col(std::size_t i, std::size_t j, const BigInt& k) {
    for (std::size_t r = 0; r < a.rows; ++r) a.at(r, i) += k * a.at(r, j);
    if (v != nullptr)
      for (std::size_t r = 0; r < v->rows; ++r) v->at(r, i) += k * v->at(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
    if (u != nullptr)
      for (std::size_t c = 0; c < u->cols; ++c) u->at(i, c) = -u->at(i, c);
  }

  bool find_min(std::size_t t, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    BigInt best;
    for (std::size_t r = t; r < a.rows; ++r)
      for (std::size_t c = t; c < a.cols; ++c) {
        const BigInt& x = a.at(r, c);
        if (sgn(x) == 0) continue;
        if (!found || abs(x) < best) {
          best = abs(x);
          pr = r;
          pc = c;
          found = true;
          if (best == 1) return true;
        }
      }
    return found;
  }

  std::size_t run() {
    std::size_t t = 0;
    std::size_t limit = std::min(a.rows, a.cols);
    while (t < limit) {
      std::size_t pr = 0;
      std::size_t pc = 0;
      if (!find_min(t, pr, pc)) break;
      swap_rows(t, pr);
      swap_cols(t, pc);
      bool clean = false;
      while (!clean) {
        clean = true;
        for (std::size_t r = t + 1; r < a.rows; ++r) {
          if (sgn(a.at(r, t)) == 0) continue;
          BigInt q;
          mpz_fdiv_q(q.get_mpz_t(), a.at(r, t).get_mpz_t(), a.at(t, t).get_mpz_t());
          add_row(r, t, -q);
          if (sgn(a.at(r, t)) != 0) {
            swap_rows(t, r);
            clean = false;
          }
        }
        for (std::size_t c = t + 1; c < a.cols; ++c) {
          if (sgn(a.at(t, c)) == 0) continue;
          BigInt q;
          mpz_fdiv_q(q.get_mpz_t(), a.at(t, c).get_mpz_t(), a.at(t, t).get_mpz_t());
          add_col(c, t, -q);
          if (sgn(a.at(t, c)) != 0) {
            swap_cols(t, c);
            clean = false;
          }
        }
        if (!clean) continue;
        // pivot must divide the rest of the block
        for (std::size_t r = t + 1; r < a.rows && clean; ++r)
          for (std::size_t c = t + 1; c < a.cols; ++c) {
            if (sgn(a.at(r, c)) == 0) continue;
            if (!mpz_divisible_p(a.at(r, c).get_mpz_t(), a.at(t, t).get_mpz_t())) {
              add_row(t, r, BigInt(1));
              clean = false;
              break;
            }
          }
      }
      if (sgn(a.at(t, t)) < 0) negate_row(t);
      ++t;
    }
    return t;
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult res;
  res.U = IntMatrix::identity(m.rows);
  res.V = IntMatrix::identity(m.cols);
  Reducer red{m, &res.U, &res.V};
  res.rank = red.run();
  res.D = red.a;
  for (std::size_t i = 0; i < res.rank; ++i) res.divisors.push_back(res.D.at(i, i));
  res.certified = (res.U * m * res.V) == res.D;
  if (!res.certified) throw std::logic_error("Smith normal form certificate mismatch");
  return res;
}

std::vector<BigInt> smith_divisors(IntMatrix m) {
  Reducer red{std::move(m)};
  std::size_t rank = red.run();
  std::vector<BigInt> out;
  out.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) out.push_back(red.a.at(i, i));
  return out;
}

std::size_t rank_mod(const std::vector<BigInt>& divisors, const BigInt& p) {
  std::size_t r = 0;
  for (const auto& d : divisors)
    if (!mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) ++r;
  return r;
}

}  // namespace bqtop
