#include "rmt/bigfloat.hpp"

#include <mpfr.h>

#include <algorithm>
#include <vector>

namespace rmt {

struct BigFloat::Impl {
    mpfr_t v;
    explicit Impl(long bits) { mpfr_init2(v, bits); }
    ~Impl() { mpfr_clear(v); }
};

namespace {
constexpr mpfr_rnd_t kRound = MPFR_RNDN;
}

BigFloat::BigFloat(long bits) : impl_(new Impl(bits)) { mpfr_set_zero(impl_->v, 1); }

BigFloat::BigFloat(const Rational& value, long bits) : impl_(new Impl(bits)) {
    mpfr_set_q(impl_->v, value.raw().get_mpq_t(), kRound);
}

BigFloat::BigFloat(const BigFloat& other) : impl_(new Impl(other.bits())) {
    mpfr_set(impl_->v, other.impl_->v, kRound);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : impl_(other.impl_) { other.impl_ = nullptr; }

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        BigFloat copy(other);
        std::swap(impl_, copy.impl_);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    std::swap(impl_, other.impl_);
    return *this;
}

BigFloat::~BigFloat() { delete impl_; }

long BigFloat::bits() const { return static_cast<long>(mpfr_get_prec(impl_->v)); }

#define RMT_BIGFLOAT_BINARY(OP, FN)                                         \
    BigFloat operator OP(const BigFloat& a, const BigFloat& b) {            \
        BigFloat out(std::max(a.bits(), b.bits()));                         \
        FN(out.impl_->v, a.impl_->v, b.impl_->v, kRound);                   \
        return out;                                                         \
    }

RMT_BIGFLOAT_BINARY(+, mpfr_add)
RMT_BIGFLOAT_BINARY(-, mpfr_sub)
RMT_BIGFLOAT_BINARY(*, mpfr_mul)
RMT_BIGFLOAT_BINARY(/, mpfr_div)
#undef RMT_BIGFLOAT_BINARY

bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.impl_->v, b.impl_->v) != 0; }

BigFloat BigFloat::abs() const {
    BigFloat out(bits());
    mpfr_abs(out.impl_->v, impl_->v, kRound);
    return out;
}

BigFloat BigFloat::log() const {
    BigFloat out(bits());
    mpfr_log(out.impl_->v, impl_->v, kRound);
    return out;
}

BigFloat BigFloat::exp() const {
    BigFloat out(bits());
    mpfr_exp(out.impl_->v, impl_->v, kRound);
    return out;
}

BigFloat BigFloat::pow(const BigFloat& exponent) const {
    BigFloat out(bits());
    mpfr_pow(out.impl_->v, impl_->v, exponent.impl_->v, kRound);
    return out;
}

double BigFloat::to_double() const { return mpfr_get_d(impl_->v, kRound); }

std::string BigFloat::str(int digits) const {
    std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, impl_->v);
    return std::string(buf.data());
}

}  // namespace rmt
