#include "toroidal/multi_poly.hpp"

#include "toroidal/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace toroidal {

namespace {

unsigned total(const Exponent& e)
{
    return std::accumulate(e.begin(), e.end(), 0u);
}

void check_same_nvars(const MultiPoly& a, const MultiPoly& b)
{
    if (a.nvars() != b.nvars())
        throw DimensionError("polynomials have different variable counts (" + std::to_string(a.nvars()) +
                             " vs " + std::to_string(b.nvars()) + ")");
}

void sort_terms(std::vector<Term>& terms)
{
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grlex_less(b.exp, a.exp); });
}

// Merge of two descending-sorted term lists; sign selects b's sign.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && grlex_less(ib->exp, ia->exp))) {
            out.push_back(*ia++);
        } else if (ia == a.end() || grlex_less(ia->exp, ib->exp)) {
            out.push_back(*ib++);
            if (negate_b)
                out.back().coeff = -out.back().coeff;
        } else {
            Rational c = negate_b ? Rational(ia->coeff - ib->coeff) : Rational(ia->coeff + ib->coeff);
            if (c != 0)
                out.push_back(Term{ia->exp, std::move(c)});
            ++ia;
            ++ib;
        }
    }
    return out;
}

} // namespace

bool grlex_less(const Exponent& a, const Exponent& b)
{
    unsigned da = total(a);
    unsigned db = total(b);
    if (da != db)
        return da < db;
    // Lexicographic with x_0 most significant.
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t ExponentHash::operator()(const Exponent& e) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto v : e) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

MultiPoly::MultiPoly(std::size_t nvars) : nvars_(nvars)
{
    if (nvars == 0)
        throw DimensionError("a polynomial needs at least one variable");
}

MultiPoly MultiPoly::from_terms(std::size_t nvars, std::vector<Term> terms)
{
    MultiPoly p(nvars);
    for (const auto& t : terms)
        if (t.exp.size() != nvars)
            throw DimensionError("exponent vector length differs from variable count");
    sort_terms(terms);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0)
                p.terms_.pop_back();
        } else if (t.coeff != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c)
{
    return monomial(nvars, Exponent(nvars, 0), c);
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index)
{
    if (index >= nvars)
        throw DimensionError("variable index out of range");
    Exponent e(nvars, 0);
    e[index] = 1;
    return monomial(nvars, std::move(e), Rational(1));
}

MultiPoly MultiPoly::monomial(std::size_t nvars, Exponent exp, const Rational& c)
{
    MultiPoly p(nvars);
    if (exp.size() != nvars)
        throw DimensionError("exponent vector length differs from variable count");
    if (c != 0)
        p.terms_.push_back(Term{std::move(exp), c});
    return p;
}

bool MultiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && total(terms_.front().exp) == 0);
}

int MultiPoly::degree() const
{
    // Descending graded order: the first term has maximal total degree.
    return terms_.empty() ? -1 : static_cast<int>(total(terms_.front().exp));
}

int MultiPoly::degree_in(std::size_t var) const
{
    if (var >= nvars_)
        throw DimensionError("variable index out of range");
    int d = -1;
    for (const auto& t : terms_)
        d = std::max(d, static_cast<int>(t.exp[var]));
    return d;
}

bool MultiPoly::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    unsigned d = total(terms_.front().exp);
    return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return total(t.exp) == d; });
}

Rational MultiPoly::coefficient(const Exponent& exp) const
{
    if (exp.size() != nvars_)
        throw DimensionError("exponent vector length differs from variable count");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, const Exponent& e) { return grlex_less(e, t.exp); });
    if (it != terms_.end() && it->exp == exp)
        return it->coeff;
    return Rational(0);
}

Rational MultiPoly::constant_term() const
{
    return coefficient(Exponent(nvars_, 0));
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly p = *this;
    for (auto& t : p.terms_)
        t.coeff = -t.coeff;
    return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other)
{
    check_same_nvars(*this, other);
    terms_ = merge(terms_, other.terms_, false);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other)
{
    check_same_nvars(*this, other);
    terms_ = merge(terms_, other.terms_, true);
    return *this;
}

namespace {

// Order-preserving packed exponents: total degree in the top byte, then one
// byte per variable with x_0 most significant, so integer order is grlex
// order and key addition is exponent addition while no field overflows.
constexpr std::size_t packed_bits = 8;
constexpr std::size_t packed_max_vars = 64 / packed_bits - 1;
constexpr std::uint64_t packed_field = (1u << packed_bits) - 1;

bool packable(std::size_t nvars, int total_degree)
{
    return nvars <= packed_max_vars && total_degree >= 0 && total_degree <= static_cast<int>(packed_field);
}

unsigned shift_of(std::size_t k)
{
    return static_cast<unsigned>(64 - packed_bits * (k + 2));
}

std::uint64_t pack(const Exponent& e)
{
    std::uint64_t key = static_cast<std::uint64_t>(total(e)) << (64 - packed_bits);
    for (std::size_t k = 0; k < e.size(); ++k)
        key |= static_cast<std::uint64_t>(e[k]) << shift_of(k);
    return key;
}

Exponent unpack(std::uint64_t key, std::size_t nvars)
{
    Exponent e(nvars);
    for (std::size_t k = 0; k < nvars; ++k)
        e[k] = static_cast<std::uint32_t>((key >> shift_of(k)) & packed_field);
    return e;
}

// Every field of a is at least the matching field of b.
bool packed_divides(std::uint64_t b, std::uint64_t a, std::size_t nvars)
{
    for (std::size_t k = 0; k < nvars; ++k)
        if (((a >> shift_of(k)) & packed_field) < ((b >> shift_of(k)) & packed_field))
            return false;
    return true;
}

bool integral(const std::vector<Term>& terms)
{
    return std::all_of(terms.begin(), terms.end(), [](const Term& t) { return t.coeff.get_den() == 1; });
}

template <typename Coeff, typename MulAdd>
std::vector<Term> packed_product(const std::vector<Term>& a, const std::vector<Term>& b, std::size_t nvars,
                                 MulAdd muladd)
{
    std::vector<std::uint64_t> kb;
    kb.reserve(b.size());
    for (const auto& t : b)
        kb.push_back(pack(t.exp));
    std::unordered_map<std::uint64_t, Coeff> acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 20));
    for (const auto& ta : a) {
        std::uint64_t ka = pack(ta.exp);
        for (std::size_t j = 0; j < b.size(); ++j)
            muladd(acc[ka + kb[j]], ta.coeff, b[j].coeff);
    }
    std::vector<std::pair<std::uint64_t, Coeff*>> keys;
    keys.reserve(acc.size());
    for (auto& [key, c] : acc)
        if (c != 0)
            keys.emplace_back(key, &c);
    std::sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    std::vector<Term> out;
    out.reserve(keys.size());
    for (const auto& [key, c] : keys)
        out.push_back(Term{unpack(key, nvars), Rational(*c)});
    return out;
}

} // namespace

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    check_same_nvars(a, b);
    MultiPoly out(a.nvars_);
    if (a.is_zero() || b.is_zero())
        return out;
    if (packable(a.nvars_, a.degree() + b.degree())) {
        if (integral(a.terms_) && integral(b.terms_))
            out.terms_ = packed_product<Integer>(a.terms_, b.terms_, a.nvars_,
                                                 [](Integer& acc, const Rational& x, const Rational& y) {
                                                     mpz_addmul(acc.get_mpz_t(), x.get_num_mpz_t(),
                                                                y.get_num_mpz_t());
                                                 });
        else
            out.terms_ = packed_product<Rational>(a.terms_, b.terms_, a.nvars_,
                                                  [](Rational& acc, const Rational& x, const Rational& y) {
                                                      acc += x * y;
                                                  });
        return out;
    }
    std::unordered_map<Exponent, Rational, ExponentHash> acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 20));
    Exponent e(a.nvars_);
    Rational prod;
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k)
                e[k] = ta.exp[k] + tb.exp[k];
            mpq_mul(prod.get_mpq_t(), ta.coeff.get_mpq_t(), tb.coeff.get_mpq_t());
            auto [it, inserted] = acc.try_emplace(e, prod);
            if (!inserted)
                it->second += prod;
        }
    }
    out.terms_.reserve(acc.size());
    for (auto& [exp, c] : acc)
        if (c != 0)
            out.terms_.push_back(Term{exp, std::move(c)});
    sort_terms(out.terms_);
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other)
{
    *this = *this * other;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.coeff *= c;
    return *this;
}

MultiPoly MultiPoly::pow(unsigned exponent) const
{
    MultiPoly result = constant(nvars_, Rational(1));
    MultiPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1u;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

MultiPoly MultiPoly::partial(std::size_t var) const
{
    if (var >= nvars_)
        throw DimensionError("variable index " + std::to_string(var) + " out of range for " +
                             std::to_string(nvars_) + " variables");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (t.exp[var] == 0)
            continue;
        Term d{t.exp, t.coeff * t.exp[var]};
        d.exp[var] -= 1;
        out.push_back(std::move(d));
    }
    // Lowering one coordinate can change the lex order.
    return from_terms(nvars_, std::move(out));
}

Rational MultiPoly::eval(std::span<const Rational> point) const
{
    if (point.size() != nvars_)
        throw DimensionError("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                             std::to_string(nvars_));
    // Cache powers per variable.
    std::vector<std::vector<Rational>> powers(nvars_);
    for (std::size_t v = 0; v < nvars_; ++v) {
        powers[v].push_back(Rational(1));
    }
    auto power = [&](std::size_t v, unsigned k) -> const Rational& {
        auto& pv = powers[v];
        while (pv.size() <= k)
            pv.push_back(pv.back() * point[v]);
        return pv[k];
    };
    Rational sum = 0;
    Rational term;
    for (const auto& t : terms_) {
        term = t.coeff;
        for (std::size_t v = 0; v < nvars_; ++v)
            if (t.exp[v] != 0)
                term *= power(v, t.exp[v]);
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::remap(std::size_t new_nvars, std::span<const std::size_t> mapping) const
{
    if (mapping.size() != nvars_)
        throw DimensionError("variable mapping has wrong length");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Exponent e(new_nvars, 0);
        for (std::size_t v = 0; v < nvars_; ++v) {
            if (t.exp[v] == 0)
                continue;
            if (mapping[v] >= new_nvars)
                throw DimensionError("variable mapping target out of range");
            e[mapping[v]] += t.exp[v];
        }
        out.push_back(Term{std::move(e), t.coeff});
    }
    return from_terms(new_nvars, std::move(out));
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        bool negative = c < 0;
        if (negative)
            c = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        bool is_unit_monomial = total(t.exp) == 0;
        bool print_coeff = c != 1 || is_unit_monomial;
        if (print_coeff)
            os << toroidal::to_string(c);
        bool need_star = print_coeff;
        for (std::size_t v = 0; v < nvars_; ++v) {
            if (t.exp[v] == 0)
                continue;
            os << (need_star ? "*" : "") << 'x' << v;
            if (t.exp[v] > 1)
                os << '^' << t.exp[v];
            need_star = true;
        }
    }
    return os.str();
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, ArithOp op)
{
    switch (op) {
    case ArithOp::add:
        return a + b;
    case ArithOp::sub:
        return a - b;
    case ArithOp::mul:
        return a * b;
    }
    throw DomainError("unknown arithmetic operation");
}

MultiPoly poly_partial(const MultiPoly& p, std::size_t var)
{
    return p.partial(var);
}

Rational poly_eval(const MultiPoly& p, std::span<const Rational> point)
{
    return p.eval(point);
}

LeadingCoefficient leading_coeff(const MultiPoly& p, std::size_t var)
{
    if (p.is_zero())
        throw DomainError("leading coefficient of the zero polynomial is undefined");
    int deg = p.degree_in(var);
    std::vector<Term> out;
    for (const auto& t : p.terms())
        if (static_cast<int>(t.exp[var]) == deg) {
            Term c = t;
            c.exp[var] = 0;
            out.push_back(std::move(c));
        }
    return {static_cast<unsigned>(deg), MultiPoly::from_terms(p.nvars(), std::move(out))};
}

namespace {

// Exact division over Z; nullopt when some quotient coefficient is not an
// integer, so the caller can redo the division over Q.
std::optional<MultiPoly> packed_integral_division(const MultiPoly& p, const MultiPoly& q)
{
    const std::size_t n = p.nvars();
    std::map<std::uint64_t, Integer, std::greater<>> rem;
    for (const auto& t : p.terms())
        rem.emplace(pack(t.exp), t.coeff.get_num());
    const Term& lq = q.terms().front();
    const std::uint64_t klq = pack(lq.exp);
    const Integer lead = lq.coeff.get_num();
    std::vector<std::pair<std::uint64_t, Integer>> tail;
    for (auto it = std::next(q.terms().begin()); it != q.terms().end(); ++it)
        tail.emplace_back(pack(it->exp), it->coeff.get_num());
    std::vector<Term> quotient;
    Integer c;
    while (!rem.empty()) {
        auto top = rem.begin();
        if (!packed_divides(klq, top->first, n))
            throw DomainError("polynomial division is not exact");
        if (!mpz_divisible_p(top->second.get_mpz_t(), lead.get_mpz_t()))
            return std::nullopt;
        mpz_divexact(c.get_mpz_t(), top->second.get_mpz_t(), lead.get_mpz_t());
        const std::uint64_t shift = top->first - klq;
        rem.erase(top);
        for (const auto& [key, coeff] : tail) {
            auto [pos, inserted] = rem.try_emplace(key + shift);
            mpz_submul(pos->second.get_mpz_t(), c.get_mpz_t(), coeff.get_mpz_t());
            if (pos->second == 0)
                rem.erase(pos);
        }
        quotient.push_back(Term{unpack(shift, n), Rational(c)});
    }
    return MultiPoly::from_terms(n, std::move(quotient));
}

} // namespace

MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& q)
{
    check_same_nvars(p, q);
    if (q.is_zero())
        throw DomainError("division by the zero polynomial");
    const std::size_t n = p.nvars();
    if (q.size() == 1) {
        // Monomial divisor: divide term by term.
        const Term& lq = q.terms().front();
        std::vector<Term> out;
        out.reserve(p.size());
        for (const auto& t : p.terms()) {
            Term r{t.exp, t.coeff / lq.coeff};
            for (std::size_t k = 0; k < n; ++k) {
                if (r.exp[k] < lq.exp[k])
                    throw DomainError("polynomial division is not exact");
                r.exp[k] -= lq.exp[k];
            }
            out.push_back(std::move(r));
        }
        return MultiPoly::from_terms(n, std::move(out));
    }

    const Term& lq = q.terms().front();
    if (packable(n, std::max(p.degree(), q.degree())) && integral(p.terms()) && integral(q.terms())) {
        if (auto quotient = packed_integral_division(p, q))
            return *quotient;
    }
    if (packable(n, std::max(p.degree(), q.degree()))) {
        std::map<std::uint64_t, Rational, std::greater<>> rem;
        for (const auto& t : p.terms())
            rem.emplace(pack(t.exp), t.coeff);
        const std::uint64_t klq = pack(lq.exp);
        std::vector<std::pair<std::uint64_t, Rational>> tail;
        for (auto it = std::next(q.terms().begin()); it != q.terms().end(); ++it)
            tail.emplace_back(pack(it->exp), it->coeff);
        std::vector<Term> quotient;
        Rational c, prod;
        while (!rem.empty()) {
            auto top = rem.begin();
            if (!packed_divides(klq, top->first, n))
                throw DomainError("polynomial division is not exact");
            const std::uint64_t shift = top->first - klq;
            c = top->second / lq.coeff;
            rem.erase(top);
            for (const auto& [key, coeff] : tail) {
                mpq_mul(prod.get_mpq_t(), c.get_mpq_t(), coeff.get_mpq_t());
                auto [pos, inserted] = rem.try_emplace(key + shift, -prod);
                if (!inserted) {
                    pos->second -= prod;
                    if (pos->second == 0)
                        rem.erase(pos);
                }
            }
            quotient.push_back(Term{unpack(shift, n), c});
        }
        return MultiPoly::from_terms(n, std::move(quotient));
    }

    std::map<Exponent, Rational, GrlexGreater> rem;
    for (const auto& t : p.terms())
        rem.emplace(t.exp, t.coeff);
    std::vector<Term> quotient;
    Exponent shift(n);
    Rational c, prod;
    while (!rem.empty()) {
        auto top = rem.begin();
        for (std::size_t k = 0; k < n; ++k) {
            if (top->first[k] < lq.exp[k])
                throw DomainError("polynomial division is not exact");
            shift[k] = top->first[k] - lq.exp[k];
        }
        c = top->second / lq.coeff;
        quotient.push_back(Term{shift, c});
        rem.erase(top);
        Exponent e(n);
        for (auto it = std::next(q.terms().begin()); it != q.terms().end(); ++it) {
            for (std::size_t k = 0; k < n; ++k)
                e[k] = it->exp[k] + shift[k];
            mpq_mul(prod.get_mpq_t(), c.get_mpq_t(), it->coeff.get_mpq_t());
            auto [pos, inserted] = rem.try_emplace(e, -prod);
            if (!inserted) {
                pos->second -= prod;
                if (pos->second == 0)
                    rem.erase(pos);
            }
        }
    }
    return MultiPoly::from_terms(n, std::move(quotient));
}

} // namespace toroidal
