#include "kgc/symplectic.hpp"

#include "kgc/errors.hpp"

#include <string>

namespace kgc {

SymplecticContext::SymplecticContext(std::size_t g) : g_(g), j_(2 * g, 2 * g) {
    if (g == 0)
        throw invalid_input_error("SymplecticContext: genus must be at least 1");
    for (std::size_t i = 0; i < g; ++i) {
        j_(2 * i, 2 * i + 1) = 1;
        j_(2 * i + 1, 2 * i) = -1;
    }
}

std::size_t SymplecticContext::a_index(std::size_t i) const {
    if (i < 1 || i > g_)
        throw dimension_error("a_index: handle " + std::to_string(i) + " of " + std::to_string(g_));
    return 2 * i - 2;
}

std::size_t SymplecticContext::b_index(std::size_t i) const {
    if (i < 1 || i > g_)
        throw dimension_error("b_index: handle " + std::to_string(i) + " of " + std::to_string(g_));
    return 2 * i - 1;
}

HVector SymplecticContext::a(std::size_t i) const {
    HVector v = zero();
    v[a_index(i)] = 1;
    return v;
}

HVector SymplecticContext::b(std::size_t i) const {
    HVector v = zero();
    v[b_index(i)] = 1;
    return v;
}

Integer SymplecticContext::intersection(const HVector& x, const HVector& y) const {
    if (x.size() != dim() || y.size() != dim())
        throw dimension_error("intersection: vectors must have length " + std::to_string(dim()));
    Integer acc = 0;
    for (std::size_t i = 0; i < g_; ++i)
        acc += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i];
    return acc;
}

bool is_symplectic(const SymplecticContext& ctx, const IntMatrix& m) {
    const std::size_t n = ctx.dim();
    if (m.rows() != n || m.cols() != n)
        return false;
    // m^T j m = j, entry by entry: column r pairs with column c the way
    // basis vector r pairs with basis vector c.
    for (std::size_t r = 0; r < n; ++r) {
        HVector cr = m.col(r);
        for (std::size_t c = 0; c < n; ++c)
            if (ctx.intersection(cr, m.col(c)) != ctx.j()(r, c))
                return false;
    }
    return true;
}

SpElement::SpElement(const SymplecticContext& ctx, IntMatrix m) : g_(ctx.genus()), m_(std::move(m)) {
    if (m_.rows() != ctx.dim() || m_.cols() != ctx.dim())
        throw dimension_error("SpElement: matrix is " + std::to_string(m_.rows()) + "x" +
                              std::to_string(m_.cols()) + ", expected " + std::to_string(ctx.dim()) +
                              "x" + std::to_string(ctx.dim()));
    if (!is_symplectic(ctx, m_))
        throw invalid_input_error("SpElement: matrix does not preserve the pairing");
}

SpElement SpElement::identity(const SymplecticContext& ctx) {
    return SpElement(ctx, IntMatrix::identity(ctx.dim()));
}

HVector SpElement::apply(const HVector& x) const {
    if (x.size() != m_.cols())
        throw dimension_error("SpElement::apply: vector length mismatch");
    return m_ * x;
}

SpElement SpElement::inverse() const {
    SymplecticContext ctx(g_);
    return SpElement(ctx, -(ctx.j() * m_.transpose() * ctx.j()));
}

SpElement operator*(const SpElement& a, const SpElement& b) {
    if (a.genus() != b.genus())
        throw dimension_error("SpElement product: genus mismatch");
    SymplecticContext ctx(a.genus());
    return SpElement(ctx, a.matrix() * b.matrix());
}

SpElement transvection(const SymplecticContext& ctx, const HVector& a) {
    if (a.size() != ctx.dim())
        throw dimension_error("transvection: vector length mismatch");
    IntMatrix t = IntMatrix::identity(ctx.dim());
    // Column c of the transvection is e_c + (e_c . a) a, and e_c . a is the
    // c-th entry of j a.
    for (std::size_t c = 0; c < ctx.dim(); ++c) {
        Integer k = (c % 2 == 0) ? Integer(a[c + 1]) : Integer(-a[c - 1]);
        if (k == 0)
            continue;
        for (std::size_t r = 0; r < ctx.dim(); ++r)
            t(r, c) += k * a[r];
    }
    return SpElement(ctx, std::move(t));
}

SpElement psi_pq(const SymplecticContext& ctx, std::size_t p, std::size_t q) {
    if (p < 1 || q <= p || q > ctx.genus())
        throw invalid_input_error("psi_pq: need 1 <= p < q <= g, got p=" + std::to_string(p) +
                                  " q=" + std::to_string(q) + " g=" + std::to_string(ctx.genus()));
    const std::size_t ap = ctx.a_index(p), bp = ctx.b_index(p);
    const std::size_t aq = ctx.a_index(q), bq = ctx.b_index(q);
    IntMatrix m = IntMatrix::identity(ctx.dim());
    // A_p -> A_p + A_q + B_q
    m(aq, ap) = 1;
    m(bq, ap) = 1;
    // B_p -> A_p + B_p
    m(bp, bp) = 1;
    m(ap, bp) = 1;
    // A_q -> A_q + A_p + B_p
    m(ap, aq) = 1;
    m(bp, aq) = 1;
    // B_q -> A_q + B_q
    m(aq, bq) = 1;
    return SpElement(ctx, std::move(m));
}

PrimitivePart primitive_part(const HVector& x) {
    Integer n = 0;
    for (const Integer& v : x)
        n = igcd(n, v);
    if (n == 0)
        throw invalid_input_error("primitive_part: zero vector has no primitive part");
    PrimitivePart res;
    res.multiplier = n;
    res.primitive.reserve(x.size());
    for (const Integer& v : x)
        res.primitive.push_back(v / n);
    return res;
}

bool is_primitive(const HVector& x) {
    Integer n = 0;
    for (const Integer& v : x) {
        n = igcd(n, v);
        if (n == 1)
            return true;
    }
    return false;
}

} // namespace kgc
