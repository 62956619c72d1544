#include "hciz.hpp"

#include <mpfr.h>

#include <deque>
#include <stdexcept>
#include <utility>

namespace gcum::bessel {

namespace {

/// Minimal RAII handle for one mpfr_t.
class Big {
public:
    explicit Big(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    Big(const Big&) = delete;
    Big& operator=(const Big&) = delete;
    ~Big() { mpfr_clear(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

void check_distinct(const std::vector<algebra::Rational>& v, const char* name) {
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] == v[j])
                throw std::domain_error(std::string("hciz_theta1: repeated entries in ") + name);
}

}  // namespace

double hciz_theta1(const std::vector<algebra::Rational>& a, const std::vector<algebra::Rational>& x,
                   int prec_bits) {
    size_t n = a.size();
    if (n == 0 || x.size() != n) throw std::invalid_argument("hciz_theta1: size mismatch");
    if (prec_bits < 64) throw std::invalid_argument("hciz_theta1: prec_bits too small");
    check_distinct(a, "a");
    check_distinct(x, "x");

    mpfr_prec_t prec = prec_bits;
    // cells[i*n+j] = exp(a_i x_j); deque keeps element addresses stable.
    std::deque<Big> storage;
    std::vector<mpfr_ptr> cells(n * n);
    {
        Big tmp(prec), qa(prec), qx(prec);
        for (size_t i = 0; i < n; ++i) {
            mpfr_set_q(qa.get(), a[i].raw().get_mpq_t(), MPFR_RNDN);
            for (size_t j = 0; j < n; ++j) {
                mpfr_set_q(qx.get(), x[j].raw().get_mpq_t(), MPFR_RNDN);
                mpfr_mul(tmp.get(), qa.get(), qx.get(), MPFR_RNDN);
                Big& cell = storage.emplace_back(prec);
                mpfr_exp(cell.get(), tmp.get(), MPFR_RNDN);
                cells[i * n + j] = cell.get();
            }
        }
    }

    // LU with partial pivoting; det accumulates pivots and row-swap signs.
    Big det(prec);
    mpfr_set_ui(det.get(), 1, MPFR_RNDN);
    {
        Big factor(prec), tmp(prec);
        for (size_t col = 0; col < n; ++col) {
            size_t pivot = col;
            for (size_t r = col + 1; r < n; ++r)
                if (mpfr_cmpabs(cells[r * n + col], cells[pivot * n + col]) > 0) pivot = r;
            if (pivot != col) {
                for (size_t j = 0; j < n; ++j) std::swap(cells[col * n + j], cells[pivot * n + j]);
                mpfr_neg(det.get(), det.get(), MPFR_RNDN);
            }
            if (mpfr_zero_p(cells[col * n + col])) {
                mpfr_set_ui(det.get(), 0, MPFR_RNDN);
                break;
            }
            mpfr_mul(det.get(), det.get(), cells[col * n + col], MPFR_RNDN);
            for (size_t r = col + 1; r < n; ++r) {
                mpfr_div(factor.get(), cells[r * n + col], cells[col * n + col], MPFR_RNDN);
                for (size_t j = col + 1; j < n; ++j) {
                    mpfr_mul(tmp.get(), factor.get(), cells[col * n + j], MPFR_RNDN);
                    mpfr_sub(cells[r * n + j], cells[r * n + j], tmp.get(), MPFR_RNDN);
                }
            }
        }
    }

    // Exact rational prefactor: 1! 2! ... (N-1)! / prod_{i<j} (x_i - x_j)(a_i - a_j).
    algebra::Rational denom(1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) denom = denom * (x[i] - x[j]) * (a[i] - a[j]);
    algebra::Rational numer(1);
    {
        algebra::Rational running(1);
        for (long k = 1; k <= static_cast<long>(n) - 1; ++k) {
            running = running * algebra::Rational(k);
            numer = numer * running;
        }
    }
    algebra::Rational pref = numer / denom;

    Big prefb(prec), result(prec);
    mpfr_set_q(prefb.get(), pref.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_mul(result.get(), det.get(), prefb.get(), MPFR_RNDN);
    return mpfr_get_d(result.get(), MPFR_RNDN);
}

}  // namespace gcum::bessel
