#include "isoverify/funcspec.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "isoverify/errors.hpp"

namespace isoverify {

namespace {

struct ExprNode {
    enum class Op { Const, Var, Add, Sub, Mul, Div, Pow, Neg };
    Op op{};
    Rational value;            // Const
    unsigned long exponent{};  // Pow
    std::unique_ptr<ExprNode> lhs, rhs;
};

/// Recursive-descent parser for rational expressions over x.
/// Offsets in errors are relative to the full DSL string via `base`.
class ExprParser {
public:
    ExprParser(std::string_view text, const std::string& full, std::size_t base)
        : text_(text), full_(full), base_(base) {}

    std::unique_ptr<ExprNode> parse() {
        auto node = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return node;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, full_, base_ + pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::unique_ptr<ExprNode> expression() {
        auto node = term();
        for (;;) {
            if (eat('+')) {
                node = make(ExprNode::Op::Add, std::move(node), term());
            } else if (eat('-')) {
                node = make(ExprNode::Op::Sub, std::move(node), term());
            } else {
                return node;
            }
        }
    }

    std::unique_ptr<ExprNode> term() {
        auto node = factor();
        for (;;) {
            if (eat('*')) {
                node = make(ExprNode::Op::Mul, std::move(node), factor());
            } else if (eat('/')) {
                node = make(ExprNode::Op::Div, std::move(node), factor());
            } else {
                return node;
            }
        }
    }

    std::unique_ptr<ExprNode> factor() {
        if (eat('-')) {
            auto node = std::make_unique<ExprNode>();
            node->op = ExprNode::Op::Neg;
            node->lhs = factor();
            return node;
        }
        auto node = atom();
        if (eat('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_) fail("expected a nonnegative integer exponent");
            auto p = std::make_unique<ExprNode>();
            p->op = ExprNode::Op::Pow;
            p->exponent = std::stoul(std::string(text_.substr(start, pos_ - start)));
            p->lhs = std::move(node);
            return p;
        }
        return node;
    }

    std::unique_ptr<ExprNode> atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto node = expression();
            if (!eat(')')) fail("expected ')'");
            return node;
        }
        if (c == 'x') {
            ++pos_;
            auto node = std::make_unique<ExprNode>();
            node->op = ExprNode::Op::Var;
            return node;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            auto node = std::make_unique<ExprNode>();
            node->op = ExprNode::Op::Const;
            node->value = Rational(Int(std::string(text_.substr(start, pos_ - start))));
            return node;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    static std::unique_ptr<ExprNode> make(ExprNode::Op op, std::unique_ptr<ExprNode> l,
                                          std::unique_ptr<ExprNode> r) {
        auto node = std::make_unique<ExprNode>();
        node->op = op;
        node->lhs = std::move(l);
        node->rhs = std::move(r);
        return node;
    }

    std::string_view text_;
    const std::string& full_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

Rational eval_expr(const ExprNode& node, const Rational& x, const Budget& budget) {
    switch (node.op) {
        case ExprNode::Op::Const:
            return node.value;
        case ExprNode::Op::Var:
            return x;
        case ExprNode::Op::Add:
            return eval_expr(*node.lhs, x, budget) + eval_expr(*node.rhs, x, budget);
        case ExprNode::Op::Sub:
            return eval_expr(*node.lhs, x, budget) - eval_expr(*node.rhs, x, budget);
        case ExprNode::Op::Mul:
            return eval_expr(*node.lhs, x, budget) * eval_expr(*node.rhs, x, budget);
        case ExprNode::Op::Div: {
            Rational d = eval_expr(*node.rhs, x, budget);
            if (d.is_zero()) throw RangeViolation("expression divides by zero at x = " + x.str());
            return eval_expr(*node.lhs, x, budget) / d;
        }
        case ExprNode::Op::Neg:
            return -eval_expr(*node.lhs, x, budget);
        case ExprNode::Op::Pow: {
            Rational b = eval_expr(*node.lhs, x, budget);
            std::size_t bits = std::max(bit_length(b.num()), bit_length(b.den()));
            if (bits * std::max(node.exponent, 1ul) > budget.max_value_bits)
                throw BudgetExceeded("power exceeds the bignum size budget");
            return Rational(pow_ui(b.num(), node.exponent), pow_ui(b.den(), node.exponent));
        }
    }
    throw Error("unreachable");
}

}  // namespace

struct ApproxFunction::Impl {
    Kind kind{};
    bool decreasing = false;
    Rational constant_value;
    unsigned long sigma = 0;
    Int base;
    std::vector<std::pair<Int, Rational>> points;
    std::string expression;
    std::unique_ptr<ExprNode> ast;
    mutable std::shared_mutex cache_mu;
    mutable std::map<Int, Rational, IntLess> cache;
};

ApproxFunction::Kind ApproxFunction::kind() const { return impl_->kind; }
bool ApproxFunction::declared_decreasing() const { return impl_->decreasing; }

ApproxFunction ApproxFunction::constant(const Rational& value) {
    if (value.sign() <= 0 || value > Rational(1))
        throw RangeViolation("constant rule value " + value.str() + " outside (0, 1]");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Constant;
    impl->decreasing = true;
    impl->constant_value = value;
    return ApproxFunction(std::move(impl));
}

ApproxFunction ApproxFunction::power_reciprocal(unsigned long sigma) {
    if (sigma < 1) throw InvalidArgument("pow rule requires sigma >= 1");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::PowerReciprocal;
    impl->decreasing = true;
    impl->sigma = sigma;
    return ApproxFunction(std::move(impl));
}

ApproxFunction ApproxFunction::exp_reciprocal(const Int& base) {
    if (base < 2) throw InvalidArgument("exp rule requires base >= 2");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::ExpReciprocal;
    impl->decreasing = true;
    impl->base = base;
    return ApproxFunction(std::move(impl));
}

ApproxFunction ApproxFunction::table(std::vector<std::pair<Int, Rational>> points,
                                     bool declared_decreasing) {
    if (points.empty()) throw InvalidArgument("table rule needs at least one point");
    if (points.front().first != 1)
        throw InvalidArgument("table rule must start at x = 1 to be total on Z+");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i > 0 && points[i].first <= points[i - 1].first)
            throw InvalidArgument("table abscissae must be strictly increasing");
        const Rational& v = points[i].second;
        if (v.sign() <= 0 || v > Rational(1))
            throw RangeViolation("table value " + v.str() + " outside (0, 1]");
        if (declared_decreasing && i > 0 && points[i].second > points[i - 1].second)
            throw MonotonicityViolation("table declared decreasing but increases at x = " +
                                        to_string(points[i].first));
    }
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Table;
    impl->decreasing = declared_decreasing;
    impl->points = std::move(points);
    return ApproxFunction(std::move(impl));
}

ApproxFunction ApproxFunction::composite(std::string_view expression, bool declared_decreasing) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Composite;
    impl->decreasing = declared_decreasing;
    impl->expression = std::string(expression);
    impl->ast = ExprParser(impl->expression, impl->expression, 0).parse();
    return ApproxFunction(std::move(impl));
}

std::string ApproxFunction::dsl() const {
    const Impl& im = *impl_;
    switch (im.kind) {
        case Kind::Constant:
            return "const " + im.constant_value.str();
        case Kind::PowerReciprocal:
            return "pow " + std::to_string(im.sigma);
        case Kind::ExpReciprocal:
            return "exp " + to_string(im.base);
        case Kind::Table: {
            std::string out = "table ";
            for (std::size_t i = 0; i < im.points.size(); ++i) {
                if (i) out += ",";
                out += to_string(im.points[i].first) + ":" + im.points[i].second.str();
            }
            if (im.decreasing) out += " decreasing";
            return out;
        }
        case Kind::Composite:
            return "expr " + im.expression + (im.decreasing ? " decreasing" : "");
    }
    throw Error("unreachable");
}

Rational ApproxFunction::eval(const Int& x, const Budget& budget) const {
    if (x < 1) throw InvalidArgument("approximation functions are defined on x >= 1");
    const Impl& im = *impl_;
    switch (im.kind) {
        case Kind::Constant:
            return im.constant_value;
        case Kind::PowerReciprocal: {
            if (bit_length(x) * im.sigma > budget.max_value_bits)
                throw BudgetExceeded("x^sigma exceeds the bignum size budget");
            return Rational(1, pow_ui(x, im.sigma));
        }
        case Kind::ExpReciprocal: {
            if (x > Int(budget.max_value_bits) ||
                x.get_ui() * bit_length(im.base) > budget.max_value_bits)
                throw BudgetExceeded("base^x exceeds the bignum size budget at x = " + to_string(x));
            return Rational(1, pow_ui(im.base, x.get_ui()));
        }
        case Kind::Table: {
            auto it = std::upper_bound(
                im.points.begin(), im.points.end(), x,
                [](const Int& v, const std::pair<Int, Rational>& p) { return v < p.first; });
            return std::prev(it)->second;
        }
        case Kind::Composite: {
            {
                std::shared_lock lk(im.cache_mu);
                auto it = im.cache.find(x);
                if (it != im.cache.end()) return it->second;
            }
            Rational v;
            try {
                v = eval_expr(*im.ast, Rational(x), budget);
            } catch (const DivisionByZero&) {
                throw RangeViolation("expression undefined at x = " + to_string(x));
            }
            if (v.sign() <= 0 || v > Rational(1))
                throw RangeViolation("f(" + to_string(x) + ") = " + v.str() + " outside (0, 1]");
            std::unique_lock lk(im.cache_mu);
            auto [it, inserted] = im.cache.emplace(x, v);
            if (inserted && im.decreasing) {
                if (it != im.cache.begin() && std::prev(it)->second < v)
                    throw MonotonicityViolation(
                        "declared-decreasing expression increases between x = " +
                        to_string(std::prev(it)->first) + " and x = " + to_string(x));
                auto next = std::next(it);
                if (next != im.cache.end() && v < next->second)
                    throw MonotonicityViolation(
                        "declared-decreasing expression increases between x = " + to_string(x) +
                        " and x = " + to_string(next->first));
            }
            return it->second;
        }
    }
    throw Error("unreachable");
}

ApproxFunction::Gap ApproxFunction::gap(const Int& x, const Budget& budget) const {
    if (x < 1) throw InvalidArgument("gap is defined on x >= 1");
    if (impl_->kind == Kind::ExpReciprocal && x > Int(budget.max_exp_gap_x))
        throw BudgetExceeded("exp-rule gap at x = " + to_string(x) +
                             " exceeds the configured cap " + std::to_string(budget.max_exp_gap_x) +
                             " (the inner argument has ~x^2 base^x bits)");
    Rational fx = eval(x, budget);
    // A(x) x^2 / f(x) = B(x) x^2, an integer; f is evaluated there directly.
    Int argument = fx.den() * x * x + 2;
    Rational fN = eval(argument, budget);
    // f(x)^2 / (A(x) x)^2 = 1 / (B(x) x)^2
    Rational value = fN / Rational(fx.den() * fx.den() * x * x);
    return Gap{x, std::move(value), std::move(argument)};
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void rethrow_rebased(const ParseError& e, const std::string& full, std::size_t base) {
    throw ParseError(e.message(), full, base + e.offset());
}

}  // namespace

ApproxFunction ApproxFunction::parse(std::string_view dsl_view) {
    const std::string full(dsl_view);

    bool decreasing = false;
    std::string_view trimmed = trim(dsl_view);
    constexpr std::string_view kFlag = "decreasing";
    if (trimmed.size() > kFlag.size() && trimmed.substr(trimmed.size() - kFlag.size()) == kFlag &&
        std::isspace(static_cast<unsigned char>(trimmed[trimmed.size() - kFlag.size() - 1]))) {
        decreasing = true;
        trimmed.remove_suffix(kFlag.size());
        trimmed = trim(trimmed);
    }
    if (trimmed.empty()) throw ParseError("empty function specification", full, 0);

    std::size_t word_begin = static_cast<std::size_t>(trimmed.data() - dsl_view.data());
    std::size_t space = trimmed.find_first_of(" \t");
    std::string_view word = space == std::string_view::npos ? trimmed : trimmed.substr(0, space);
    std::string_view args =
        space == std::string_view::npos ? std::string_view{} : trim(trimmed.substr(space + 1));
    std::size_t args_begin = args.empty() ? word_begin + word.size()
                                          : static_cast<std::size_t>(args.data() - dsl_view.data());

    auto parse_rational = [&](std::string_view text, std::size_t base) -> Rational {
        try {
            return Rational::parse(text);
        } catch (const ParseError& e) {
            rethrow_rebased(e, full, base);
        }
    };

    if (word == "const") {
        if (args.empty()) throw ParseError("const rule needs a rational value", full, args_begin);
        try {
            return constant(parse_rational(args, args_begin));
        } catch (const RangeViolation& e) {
            throw ParseError(e.what(), full, args_begin);
        }
    }
    if (word == "pow") {
        if (args.empty()) throw ParseError("pow rule needs an exponent", full, args_begin);
        Rational sigma = parse_rational(args, args_begin);
        if (!sigma.is_integer() || sigma.sign() <= 0)
            throw ParseError("pow rule needs a positive integer exponent", full, args_begin);
        return power_reciprocal(sigma.num().get_ui());
    }
    if (word == "exp") {
        if (args.empty()) throw ParseError("exp rule needs a base", full, args_begin);
        Rational base = parse_rational(args, args_begin);
        if (!base.is_integer() || base.num() < 2)
            throw ParseError("exp rule needs an integer base >= 2", full, args_begin);
        return exp_reciprocal(base.num());
    }
    if (word == "table") {
        if (args.empty()) throw ParseError("table rule needs points x:value", full, args_begin);
        std::vector<std::pair<Int, Rational>> points;
        std::size_t pos = 0;
        while (pos <= args.size()) {
            std::size_t comma = args.find(',', pos);
            std::string_view entry =
                args.substr(pos, comma == std::string_view::npos ? args.size() - pos : comma - pos);
            std::size_t entry_base = args_begin + pos;
            std::size_t colon = entry.find(':');
            if (colon == std::string_view::npos)
                throw ParseError("table entry needs the form x:value", full, entry_base);
            Rational xr = parse_rational(trim(entry.substr(0, colon)), entry_base);
            if (!xr.is_integer() || xr.sign() <= 0)
                throw ParseError("table abscissa must be a positive integer", full, entry_base);
            Rational v = parse_rational(trim(entry.substr(colon + 1)), entry_base + colon + 1);
            points.emplace_back(xr.num(), std::move(v));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        try {
            return table(std::move(points), decreasing);
        } catch (const Error& e) {
            throw ParseError(e.what(), full, args_begin);
        }
    }
    if (word == "expr") {
        if (args.empty()) throw ParseError("expr rule needs an expression", full, args_begin);
        auto impl = std::make_shared<Impl>();
        impl->kind = Kind::Composite;
        impl->decreasing = decreasing;
        impl->expression = std::string(args);
        impl->ast = ExprParser(impl->expression, full, args_begin).parse();
        return ApproxFunction(std::move(impl));
    }
    throw ParseError(
        "unknown rule '" + std::string(word) + "' (expected const, pow, exp, table or expr)", full,
        word_begin);
}

namespace {
Rational mu_square_or_throw(const QuadraticSurd& mu) {
    if (mu.sign() <= 0 || mu.cmp(Rational(1)) >= 0)
        throw InvalidArgument("psi requires mu in (0, 1)");
    auto sq = mu.rational_square();
    if (!sq) throw InvalidArgument("psi requires mu with a rational square, got " + mu.str());
    return *sq;
}
}  // namespace

std::optional<QuadraticSurd> eval_psi_exact(const QuadraticSurd& mu, const Int& x) {
    if (x < 1) throw InvalidArgument("psi is defined on x >= 1");
    Rational m2 = mu_square_or_throw(mu);
    Rational radicand = Rational(1) + m2 * Rational(4, x * x);
    // sqrt(p/q) = sqrt(pq)/q; exact when sqrt(pq) is an integer or an
    // integer multiple of sqrt(d) for mu's own radicand d.
    Int pq = radicand.num() * radicand.den();
    QuadraticSurd root;
    if (is_perfect_square(pq)) {
        root = QuadraticSurd(Rational(isqrt(pq), radicand.den()));
    } else if (!mu.is_rational() && mpz_divisible_p(pq.get_mpz_t(), mu.d().get_mpz_t()) &&
               is_perfect_square(pq / mu.d())) {
        root = QuadraticSurd::from_square_free(0, isqrt(pq / mu.d()), radicand.den(), mu.d());
    } else {
        return std::nullopt;
    }
    return (mu * Rational(2)) /
           ((QuadraticSurd(Rational(1)) + root) * QuadraticSurd(Rational(x * x)));
}

RationalInterval eval_psi(const QuadraticSurd& mu, const Int& x, const Rational& width,
                          const Budget& budget) {
    if (x < 1) throw InvalidArgument("psi is defined on x >= 1");
    if (width.sign() <= 0) throw InvalidArgument("nonpositive target width");
    if (auto exact = eval_psi_exact(mu, x)) return exact->enclose(width);
    Rational m2 = mu_square_or_throw(mu);
    Rational radicand = Rational(1) + m2 * Rational(4, x * x);
    Rational w = width;
    for (int i = 0; i < budget.max_refinements; ++i) {
        RationalInterval root = sqrt_enclosure(radicand, w);
        RationalInterval denom = (root + Rational(1)) * Rational(x * x);
        RationalInterval psi = (mu.enclose(w) * Rational(2)) / denom;
        if (psi.width() <= width) return psi;
        w *= Rational(1, 2);
    }
    throw Undecided("psi enclosure did not reach width " + width.str());
}

RationalInterval eval_psi_below_mu(const QuadraticSurd& mu, const Int& x, const Budget& budget) {
    QuadraticSurd bound = mu * Rational(1, x * x);
    Rational w(1, 4 * x * x);
    for (int i = 0; i < budget.max_refinements; ++i) {
        RationalInterval psi = eval_psi(mu, x, w, budget);
        if (bound.cmp(psi.hi()) > 0) return psi;
        w *= Rational(1, 2);
    }
    throw Undecided("could not certify psi(" + to_string(x) + ") < mu/x^2 for mu = " + mu.str());
}

}  // namespace isoverify
