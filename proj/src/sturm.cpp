#include "qop/sturm.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

namespace qop {

namespace {

using ZPoly = std::vector<Integer>;  // ascending, trailing zeros trimmed

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long zdeg(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }

// primitive integer image of a rational polynomial, leading sign preserved
ZPoly to_primitive(const Polynomial& p) {
    ZPoly out;
    if (p.is_zero()) return out;
    Polynomial q = divide_by_content(p);
    out.reserve(q.coeffs().size());
    for (const auto& c : q.coeffs()) out.push_back(c.get_num());  // den == 1 after content removal
    return out;
}

void divide_out_content(ZPoly& p) {
    Integer g(0);
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g <= 1) return;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly zderivative(const ZPoly& p) {
    ZPoly d;
    if (p.size() <= 1) return d;
    d.reserve(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    return d;
}

// Positive multiple of rem(a, b) over Q: each elimination step multiplies the
// running remainder by lc(b), so the accumulated factor is lc(b)^steps and a
// final sign fix restores orientation. Content is not removed here; callers do.
ZPoly pseudo_rem_pos(const ZPoly& a, const ZPoly& b) {
    const Integer& lead = b.back();
    const long db = zdeg(b);
    ZPoly r = a;
    long steps = 0;
    while (zdeg(r) >= db) {
        const long k = zdeg(r) - db;
        Integer top = r.back();
        for (auto& c : r) c *= lead;
        for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= top * b[static_cast<std::size_t>(j)];
        trim(r);
        ++steps;
    }
    if (sign(lead) < 0 && (steps % 2) != 0)
        for (auto& c : r) c = -c;
    return r;
}

int sign_at(const ZPoly& p, const Integer& num, const Integer& den) {
    if (p.empty()) return 0;
    Integer acc = p.back();
    Integer den_pow(1);
    for (auto it = std::next(p.rbegin()); it != p.rend(); ++it) {
        den_pow *= den;
        acc = acc * num + *it * den_pow;
    }
    return sign(acc);
}

}  // namespace

SturmChain::SturmChain(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm chain of zero polynomial");
    ZPoly s0 = to_primitive(squarefree_part(p));
    bound_ = Rational(1);
    if (zdeg(s0) >= 1) {
        Integer max_abs(0);
        for (std::size_t i = 0; i + 1 < s0.size(); ++i) {
            Integer a = abs(s0[i]);
            if (a > max_abs) max_abs = a;
        }
        Rational ratio(max_abs, abs(s0.back()));
        ratio.canonicalize();
        bound_ = Rational(1) + ratio;
    }
    chain_.push_back(std::move(s0));
    if (zdeg(chain_[0]) >= 1) {
        ZPoly s1 = zderivative(chain_[0]);
        divide_out_content(s1);
        chain_.push_back(std::move(s1));
        while (zdeg(chain_.back()) > 0) {
            ZPoly r = pseudo_rem_pos(chain_[chain_.size() - 2], chain_.back());
            if (r.empty()) break;  // unreachable for squarefree input
            for (auto& c : r) c = -c;
            divide_out_content(r);
            chain_.push_back(std::move(r));
        }
    }
}

long SturmChain::variations_at(const Rational& point) const {
    int prev = 0;
    long variations = 0;
    for (const auto& s : chain_) {
        const int sgn = sign_at(s, point.get_num(), point.get_den());
        if (sgn == 0) continue;
        if (prev != 0 && sgn != prev) ++variations;
        prev = sgn;
    }
    return variations;
}

long SturmChain::count_half_open(const Rational& lo, const Rational& hi) const {
    if (lo > hi) throw std::invalid_argument("sturm count: lo > hi");
    if (lo == hi) return 0;
    return variations_at(lo) - variations_at(hi);
}

long SturmChain::count_all_real() const {
    return count_half_open(-bound_, bound_);
}

long SturmChain::squarefree_degree() const { return zdeg(chain_[0]); }

long sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("sturm_count: requires lo < hi");
    if (p(lo) == 0 || p(hi) == 0)
        throw std::invalid_argument("sturm_count: endpoint is a root; perturb the endpoints");
    // p(hi) != 0, so the half-open count equals the open-interval count
    return SturmChain(p).count_half_open(lo, hi);
}

RootReality real_rootedness(const Polynomial& p) {
    if (p.is_zero()) return RootReality::vacuous;
    if (p.degree() == 0) return RootReality::all_real;
    // all roots of p are real iff all roots of its squarefree part are
    SturmChain chain(p);
    return chain.count_all_real() == chain.squarefree_degree() ? RootReality::all_real
                                                               : RootReality::not_all_real;
}

bool is_real_rooted(const Polynomial& p) {
    return real_rootedness(p) != RootReality::not_all_real;
}

bool has_simple_real_roots(const Polynomial& p) {
    if (p.is_zero()) return false;
    if (p.degree() == 0) return true;
    if (poly_gcd(p, derivative(p)).degree() > 0) return false;
    SturmChain chain(p);
    return chain.count_all_real() == p.degree();
}

std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    std::vector<IsolatingInterval> result;
    if (p.degree() == 0) return result;

    SturmChain chain(p);
    const Rational bound = chain.bound();
    struct Cell {
        Rational lo, hi;
        long count;
    };
    std::deque<Cell> work;
    const long total = chain.count_half_open(-bound, bound);
    if (total > 0) work.push_back({-bound, bound, total});
    while (!work.empty()) {
        Cell cell = std::move(work.front());
        work.pop_front();
        if (cell.count == 1) {
            result.push_back({cell.lo, cell.hi, 1});
            continue;
        }
        const Rational mid = (cell.lo + cell.hi) / 2;
        const long left = chain.count_half_open(cell.lo, mid);
        if (left > 0) work.push_back({cell.lo, mid, left});
        if (cell.count - left > 0) work.push_back({mid, cell.hi, cell.count - left});
    }
    std::sort(result.begin(), result.end(),
              [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });

    // attribute multiplicities via the squarefree decomposition
    auto factors = squarefree_decomposition(p);
    if (factors.size() == 1) {
        for (auto& iv : result) iv.multiplicity = factors[0].second;
    } else {
        std::vector<SturmChain> factor_chains;
        factor_chains.reserve(factors.size());
        for (const auto& [f, m] : factors) factor_chains.emplace_back(f);
        for (auto& iv : result) {
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (factor_chains[i].count_half_open(iv.lo, iv.hi) == 1) {
                    iv.multiplicity = factors[i].second;
                    break;
                }
            }
        }
    }
    return result;
}

IsolatingInterval refine_interval(const SturmChain& chain, IsolatingInterval iv,
                                  const Rational& width) {
    while (iv.hi - iv.lo > width) {
        const Rational mid = (iv.lo + iv.hi) / 2;
        if (chain.count_half_open(iv.lo, mid) == 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
    return iv;
}

}  // namespace qop
