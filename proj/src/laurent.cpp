#include "kaplansky/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace kaplansky {

namespace {

void check_range(std::int64_t v) {
    if (v < -static_cast<std::int64_t>(exp_limit) || v > exp_limit)
        throw std::overflow_error("exponent out of range: " + std::to_string(v));
}

void require_same(PrimeChar a, PrimeChar b) {
    if (a != b)
        throw std::invalid_argument("mixed characteristics: F_" + std::to_string(a.value()) +
                                    " vs F_" + std::to_string(b.value()));
}

// Bijective, order-preserving encoding of a bounded ExpVec into 63 bits;
// lets multiplication sort plain integers instead of triples.
std::uint64_t pack(ExpVec e) noexcept {
    const std::uint64_t bias = exp_limit;
    return (static_cast<std::uint64_t>(e.i + bias) << 42) |
           (static_cast<std::uint64_t>(e.j + bias) << 21) |
           static_cast<std::uint64_t>(e.k + bias);
}

ExpVec unpack(std::uint64_t v) noexcept {
    const std::int64_t bias = exp_limit;
    constexpr std::uint64_t mask = (1u << 21) - 1;
    return ExpVec{static_cast<std::int32_t>(static_cast<std::int64_t>((v >> 42) & mask) - bias),
                  static_cast<std::int32_t>(static_cast<std::int64_t>((v >> 21) & mask) - bias),
                  static_cast<std::int32_t>(static_cast<std::int64_t>(v & mask) - bias)};
}

} // namespace

ExpVec checked_add(ExpVec a, ExpVec b) {
    const std::int64_t i = static_cast<std::int64_t>(a.i) + b.i;
    const std::int64_t j = static_cast<std::int64_t>(a.j) + b.j;
    const std::int64_t k = static_cast<std::int64_t>(a.k) + b.k;
    check_range(i);
    check_range(j);
    check_range(k);
    return ExpVec{static_cast<std::int32_t>(i), static_cast<std::int32_t>(j),
                  static_cast<std::int32_t>(k)};
}

ExpVec checked_scale(ExpVec a, std::int64_t m) {
    const std::int64_t i = a.i * m, j = a.j * m, k = a.k * m;
    check_range(i);
    check_range(j);
    check_range(k);
    return ExpVec{static_cast<std::int32_t>(i), static_cast<std::int32_t>(j),
                  static_cast<std::int32_t>(k)};
}

Laurent Laurent::constant(PrimeChar d, std::int64_t c) {
    return monomial(d, ExpVec{0, 0, 0}, c);
}

Laurent Laurent::monomial(PrimeChar d, ExpVec e, std::int64_t c) {
    check_range(e.i);
    check_range(e.j);
    check_range(e.k);
    const Coeff cc(c, d);
    if (cc.is_zero())
        return Laurent(d);
    return Laurent(d, {LaurentTerm{e, cc.value()}});
}

Laurent Laurent::make(PrimeChar d, std::span<const std::pair<ExpVec, std::int64_t>> entries) {
    std::vector<std::pair<ExpVec, std::int64_t>> work(entries.begin(), entries.end());
    for (const auto& [e, c] : work) {
        check_range(e.i);
        check_range(e.j);
        check_range(e.k);
    }
    std::sort(work.begin(), work.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<LaurentTerm> out;
    out.reserve(work.size());
    const std::int64_t dd = d.value();
    for (std::size_t i = 0; i < work.size();) {
        std::int64_t acc = 0;
        const ExpVec e = work[i].first;
        for (; i < work.size() && work[i].first == e; ++i)
            acc = (acc + work[i].second % dd) % dd;
        if (acc < 0)
            acc += dd;
        if (acc != 0)
            out.push_back(LaurentTerm{e, static_cast<std::uint32_t>(acc)});
    }
    return Laurent(d, std::move(out));
}

Laurent Laurent::make(PrimeChar d, std::initializer_list<std::pair<ExpVec, std::int64_t>> entries) {
    return make(d, std::span<const std::pair<ExpVec, std::int64_t>>(entries.begin(), entries.size()));
}

Coeff Laurent::coeff_at(ExpVec e) const noexcept {
    const auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                     [](const LaurentTerm& t, ExpVec v) { return t.exp < v; });
    if (it != terms_.end() && it->exp == e)
        return Coeff(it->coeff, char_);
    return Coeff(0, char_);
}

std::optional<LaurentTerm> Laurent::as_monomial() const noexcept {
    if (terms_.size() == 1)
        return terms_.front();
    return std::nullopt;
}

Laurent Laurent::inverted(VarSet vars) const {
    std::vector<LaurentTerm> out(terms_.begin(), terms_.end());
    for (auto& t : out) {
        if (vars.has_x())
            t.exp.i = -t.exp.i;
        if (vars.has_y())
            t.exp.j = -t.exp.j;
        if (vars.has_z())
            t.exp.k = -t.exp.k;
    }
    std::sort(out.begin(), out.end());
    return Laurent(char_, std::move(out));
}

Laurent Laurent::operator-() const {
    const std::uint32_t d = char_.value();
    std::vector<LaurentTerm> out(terms_.begin(), terms_.end());
    for (auto& t : out)
        t.coeff = d - t.coeff;
    return Laurent(char_, std::move(out));
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    require_same(a.char_, b.char_);
    const std::uint64_t d = a.char_.value();
    std::vector<LaurentTerm> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        const auto& ta = a.terms_[i];
        const auto& tb = b.terms_[j];
        if (ta.exp < tb.exp) {
            out.push_back(ta);
            ++i;
        } else if (tb.exp < ta.exp) {
            out.push_back(tb);
            ++j;
        } else {
            const std::uint32_t c = static_cast<std::uint32_t>((ta.coeff + tb.coeff) % d);
            if (c != 0)
                out.push_back(LaurentTerm{ta.exp, c});
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), a.terms_.begin() + i, a.terms_.end());
    out.insert(out.end(), b.terms_.begin() + j, b.terms_.end());
    return Laurent(a.char_, std::move(out));
}

Laurent operator-(const Laurent& a, const Laurent& b) {
    return a + (-b);
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    require_same(a.char_, b.char_);
    if (a.is_zero() || b.is_zero())
        return Laurent(a.char_);
    const std::uint64_t d = a.char_.value();
    std::vector<std::pair<std::uint64_t, std::uint32_t>> prods;
    prods.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) {
            const std::uint64_t c = static_cast<std::uint64_t>(ta.coeff) * tb.coeff % d;
            prods.emplace_back(pack(checked_add(ta.exp, tb.exp)), static_cast<std::uint32_t>(c));
        }
    std::sort(prods.begin(), prods.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    std::vector<LaurentTerm> out;
    out.reserve(prods.size());
    for (std::size_t i = 0; i < prods.size();) {
        const std::uint64_t key = prods[i].first;
        std::uint64_t acc = 0;
        for (; i < prods.size() && prods[i].first == key; ++i)
            acc += prods[i].second;
        acc %= d;
        if (acc != 0)
            out.push_back(LaurentTerm{unpack(key), static_cast<std::uint32_t>(acc)});
    }
    return Laurent(a.char_, std::move(out));
}

Laurent pow(const Laurent& f, std::int64_t n) {
    if (n < 0)
        throw std::invalid_argument("pow: negative exponent " + std::to_string(n));
    Laurent acc = Laurent::constant(f.characteristic(), 1);
    Laurent base = f;
    while (n > 0) {
        if (n & 1)
            acc = acc * base;
        n >>= 1;
        if (n > 0)
            base = base * base;
    }
    return acc;
}

std::size_t Laurent::hash() const noexcept {
    // FNV-1a over the canonical term list.
    std::uint64_t h = 1469598103934665603ull;
    const auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(char_.value());
    for (const auto& t : terms_) {
        mix(pack(t.exp));
        mix(t.coeff);
    }
    return static_cast<std::size_t>(h);
}

std::string Laurent::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first)
            os << " + ";
        first = false;
        std::string vars;
        const auto piece = [&vars](char v, std::int32_t e) {
            if (e == 0)
                return;
            if (!vars.empty())
                vars += '*';
            vars += v;
            if (e != 1)
                vars += '^' + std::to_string(e);
        };
        piece('x', t.exp.i);
        piece('y', t.exp.j);
        piece('z', t.exp.k);
        if (vars.empty())
            os << t.coeff;
        else if (t.coeff == 1)
            os << vars;
        else
            os << t.coeff << '*' << vars;
    }
    return os.str();
}

} // namespace kaplansky
