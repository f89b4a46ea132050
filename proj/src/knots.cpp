#include "concord/knots.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace concord {

namespace {

KnotPtr make(KnotExpr::Kind kind, long long r = 0, long long s = 0,
             std::vector<KnotPtr> children = {}) {
    auto e = std::make_shared<KnotExpr>();
    e->kind = kind;
    e->r = r;
    e->s = s;
    e->children = std::move(children);
    return e;
}

long long gcd_ll(long long a, long long b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

}  // namespace

KnotPtr unknot() {
    static const KnotPtr u = make(KnotExpr::Kind::Unknot);
    return u;
}

KnotPtr torus(long long r, long long s) {
    if (r < 1 || s < 1) throw ParameterError("torus parameters must be positive");
    if (gcd_ll(r, s) != 1)
        throw ParameterError("torus parameters (" + std::to_string(r) + "," + std::to_string(s) +
                             ") are not coprime");
    return make(KnotExpr::Kind::Torus, r, s);
}

KnotPtr cable(long long r, long long s, KnotPtr companion) {
    if (r < 1) throw ParameterError("cable longitude parameter must be >= 1");
    if (gcd_ll(r, s) != 1)
        throw ParameterError("cable parameters (" + std::to_string(r) + "," + std::to_string(s) +
                             ") are not coprime");
    return make(KnotExpr::Kind::Cable, r, s, {std::move(companion)});
}

KnotPtr wh_plus(KnotPtr j) {
    return make(KnotExpr::Kind::WhPlus, 0, 0, {std::move(j)});
}

KnotPtr wh_minus(KnotPtr j) {
    return make(KnotExpr::Kind::WhMinus, 0, 0, {std::move(j)});
}

KnotPtr sum(std::vector<KnotPtr> parts) {
    return make(KnotExpr::Kind::Sum, 0, 0, std::move(parts));
}

KnotPtr neg(KnotPtr j) {
    return make(KnotExpr::Kind::Neg, 0, 0, {std::move(j)});
}

KnotPtr rev(KnotPtr j) {
    return make(KnotExpr::Kind::Rev, 0, 0, {std::move(j)});
}

int compare(const KnotPtr& a, const KnotPtr& b) {
    if (a.get() == b.get()) return 0;
    if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
    if (a->r != b->r) return a->r < b->r ? -1 : 1;
    if (a->s != b->s) return a->s < b->s ? -1 : 1;
    const std::size_t n = std::min(a->children.size(), b->children.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = compare(a->children[i], b->children[i]);
        if (c != 0) return c;
    }
    if (a->children.size() != b->children.size())
        return a->children.size() < b->children.size() ? -1 : 1;
    return 0;
}

bool equal(const KnotPtr& a, const KnotPtr& b) {
    return compare(a, b) == 0;
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over the grammar in the header.

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    KnotPtr run() {
        KnotPtr e = expr();
        skip_space();
        if (pos_ != text_.size()) throw SyntaxError(pos_, "trailing input");
        return normalize(e);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool try_consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!try_consume(c)) throw SyntaxError(pos_, std::string("expected '") + c + "'");
    }

    void expect_word(const std::string& w) {
        skip_space();
        if (text_.compare(pos_, w.size(), w) != 0)
            throw SyntaxError(pos_, "expected '" + w + "'");
        pos_ += w.size();
    }

    bool integer_ahead() {
        skip_space();
        std::size_t p = pos_;
        if (p < text_.size() && text_[p] == '-') ++p;
        return p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]));
    }

    long long integer() {
        skip_space();
        const std::size_t start = pos_;
        bool negative = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw SyntaxError(pos_, "expected an integer");
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000'000) throw SyntaxError(start, "integer out of range");
            ++pos_;
        }
        return negative ? -v : v;
    }

    KnotPtr expr() {
        std::vector<KnotPtr> parts{term()};
        while (try_consume('#')) parts.push_back(term());
        return parts.size() == 1 ? parts.front() : sum(std::move(parts));
    }

    KnotPtr term() {
        if (integer_ahead()) {
            const std::size_t at = pos_;
            const long long n = integer();
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] != '*')
                throw SyntaxError(pos_, "expected '*' after multiplier");
            ++pos_;
            KnotPtr a = atom();
            KnotPtr repeated;
            const long long count = n < 0 ? -n : n;
            if (count == 0) {
                repeated = unknot();
            } else {
                std::vector<KnotPtr> copies(static_cast<std::size_t>(count), a);
                repeated = copies.size() == 1 ? a : sum(std::move(copies));
            }
            (void)at;
            return n < 0 ? neg(repeated) : repeated;
        }
        if (peek() == '-') {
            ++pos_;
            return neg(atom());
        }
        return atom();
    }

    // Torus parameters may be given with signs; mirrors are normalized to Neg.
    KnotPtr signed_torus(long long r, long long s) {
        const bool mirror = (r < 0) != (s < 0);
        r = r < 0 ? -r : r;
        s = s < 0 ? -s : s;
        if (gcd_ll(r, s) != 1)
            throw ParameterError("torus parameters (" + std::to_string(r) + "," +
                                 std::to_string(s) + ") are not coprime");
        if (r == 0 || s == 0 || r == 1 || s == 1) return unknot();
        KnotPtr t = torus(r, s);
        return mirror ? neg(t) : t;
    }

    KnotPtr atom() {
        skip_space();
        if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of input");
        const char c = text_[pos_];
        if (c == 'U') {
            ++pos_;
            return unknot();
        }
        if (c == 'T') {
            ++pos_;
            expect('(');
            const long long r = integer();
            expect(',');
            const long long s = integer();
            expect(')');
            return signed_torus(r, s);
        }
        if (c == 'W') {
            expect_word("Wh");
            skip_space();
            bool plus;
            if (try_consume('+'))
                plus = true;
            else if (try_consume('-'))
                plus = false;
            else
                throw SyntaxError(pos_, "expected '+' or '-' after 'Wh'");
            expect('(');
            KnotPtr e = expr();
            expect(')');
            return plus ? wh_plus(e) : wh_minus(e);
        }
        if (c == 'c') {
            expect_word("cable");
            expect('(');
            const long long r = integer();
            expect(',');
            const long long s = integer();
            expect(';');
            KnotPtr e = expr();
            expect(')');
            if (r < 1) throw ParameterError("cable longitude parameter must be >= 1");
            return cable(r, s, e);
        }
        if (c == 'r') {
            expect_word("rev");
            expect('(');
            KnotPtr a = atom();
            expect(')');
            return rev(a);
        }
        if (c == '(') {
            ++pos_;
            KnotPtr e = expr();
            expect(')');
            return e;
        }
        throw SyntaxError(pos_, std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

KnotPtr parse(const std::string& text) {
    return Parser(text).run();
}

// ---------------------------------------------------------------------------
// Normal form.

KnotPtr normalize(const KnotPtr& e) {
    using Kind = KnotExpr::Kind;
    switch (e->kind) {
        case Kind::Unknot:
            return unknot();
        case Kind::Torus:
            if (e->r == 1 || e->s == 1) return unknot();
            return e;
        case Kind::Cable: {
            KnotPtr c = normalize(e->children[0]);
            if (c->kind == Kind::Unknot) {
                // cable of the unknot is a torus knot
                long long r = e->r, s = e->s;
                const bool mirror = s < 0;
                s = mirror ? -s : s;
                if (r == 1 || s <= 1) return unknot();
                KnotPtr t = torus(r, s);
                return mirror ? neg(t) : t;
            }
            if (e->r == 1) return c;  // the (1,s) cable is the companion itself
            if (c == e->children[0]) return e;
            return cable(e->r, e->s, c);
        }
        case Kind::WhPlus: {
            KnotPtr c = normalize(e->children[0]);
            if (c == e->children[0]) return e;
            return wh_plus(c);
        }
        case Kind::WhMinus: {
            // Wh-(x) = -Wh+(-x)
            KnotPtr c = e->children[0];
            return normalize(neg(wh_plus(neg(c))));
        }
        case Kind::Sum: {
            std::vector<KnotPtr> flat;
            for (const auto& child : e->children) {
                KnotPtr c = normalize(child);
                if (c->kind == Kind::Sum)
                    flat.insert(flat.end(), c->children.begin(), c->children.end());
                else if (c->kind != Kind::Unknot)
                    flat.push_back(c);
            }
            if (flat.empty()) return unknot();
            if (flat.size() == 1) return flat.front();
            std::sort(flat.begin(), flat.end(),
                      [](const KnotPtr& a, const KnotPtr& b) { return compare(a, b) < 0; });
            return sum(std::move(flat));
        }
        case Kind::Neg: {
            KnotPtr c = normalize(e->children[0]);
            if (c->kind == Kind::Unknot) return unknot();
            if (c->kind == Kind::Neg) return c->children[0];
            if (c == e->children[0]) return e;
            return neg(c);
        }
        case Kind::Rev: {
            KnotPtr c = normalize(e->children[0]);
            if (c->kind == Kind::Unknot) return unknot();
            if (c->kind == Kind::Rev) return c->children[0];
            if (c->kind == Kind::Neg) return normalize(neg(rev(c->children[0])));
            if (c == e->children[0]) return e;
            return rev(c);
        }
    }
    throw SelfCheckFailed("unreachable expression kind");
}

// ---------------------------------------------------------------------------
// Renderer.

namespace {

bool is_atom_text(const KnotPtr& e) {
    using Kind = KnotExpr::Kind;
    switch (e->kind) {
        case Kind::Unknot:
        case Kind::Torus:
        case Kind::Cable:
        case Kind::WhPlus:
        case Kind::WhMinus:
        case Kind::Rev:
            return true;
        default:
            return false;
    }
}

void render_expr(const KnotPtr& e, std::ostream& os);

void render_atom(const KnotPtr& e, std::ostream& os) {
    if (is_atom_text(e)) {
        render_expr(e, os);
    } else {
        os << "(";
        render_expr(e, os);
        os << ")";
    }
}

void render_expr(const KnotPtr& e, std::ostream& os) {
    using Kind = KnotExpr::Kind;
    switch (e->kind) {
        case Kind::Unknot:
            os << "U";
            return;
        case Kind::Torus:
            os << "T(" << e->r << "," << e->s << ")";
            return;
        case Kind::Cable:
            os << "cable(" << e->r << "," << e->s << "; ";
            render_expr(e->children[0], os);
            os << ")";
            return;
        case Kind::WhPlus:
        case Kind::WhMinus:
            os << (e->kind == Kind::WhPlus ? "Wh+(" : "Wh-(");
            render_expr(e->children[0], os);
            os << ")";
            return;
        case Kind::Sum: {
            // group equal consecutive operands with the n* sugar
            bool first = true;
            std::size_t i = 0;
            while (i < e->children.size()) {
                std::size_t j = i;
                while (j < e->children.size() && equal(e->children[i], e->children[j])) ++j;
                if (!first) os << " # ";
                const std::size_t count = j - i;
                if (count > 1) {
                    os << count << "*";
                    render_atom(e->children[i], os);
                } else {
                    render_expr(e->children[i], os);
                }
                first = false;
                i = j;
            }
            return;
        }
        case Kind::Neg:
            os << "-";
            render_atom(e->children[0], os);
            return;
        case Kind::Rev:
            os << "rev(";
            render_atom(e->children[0], os);
            os << ")";
            return;
    }
}

}  // namespace

std::string render(const KnotPtr& e) {
    std::ostringstream os;
    render_expr(e, os);
    return os.str();
}

}  // namespace concord
