#include "isoverify/parse.hpp"

#include <cctype>

namespace isoverify {

namespace {

class SurdParser {
public:
    SurdParser(std::string_view text, const std::string& full, std::size_t base,
               const Budget& budget)
        : text_(text), full_(full), base_(base), budget_(budget) {}

    QuadraticSurd parse() {
        QuadraticSurd v = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
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

    template <typename F>
    auto guarded(std::size_t at, F&& op) {
        try {
            return op();
        } catch (const DivisionByZero&) {
            throw ParseError("division by zero", full_, base_ + at);
        } catch (const MixedField&) {
            throw ParseError("mixing distinct radicands is not supported", full_, base_ + at);
        }
    }

    QuadraticSurd expression() {
        QuadraticSurd v = term();
        for (;;) {
            std::size_t at = pos_;
            if (eat('+')) {
                QuadraticSurd r = term();
                v = guarded(at, [&] { return v + r; });
            } else if (eat('-')) {
                QuadraticSurd r = term();
                v = guarded(at, [&] { return v - r; });
            } else {
                return v;
            }
        }
    }

    QuadraticSurd term() {
        QuadraticSurd v = factor();
        for (;;) {
            std::size_t at = pos_;
            if (eat('*')) {
                QuadraticSurd r = factor();
                v = guarded(at, [&] { return v * r; });
            } else if (eat('/')) {
                QuadraticSurd r = factor();
                v = guarded(at, [&] { return v / r; });
            } else {
                return v;
            }
        }
    }

    QuadraticSurd factor() {
        if (eat('-')) return -factor();
        return primary();
    }

    QuadraticSurd primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            QuadraticSurd v = expression();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return QuadraticSurd(Rational(integer()));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            std::string_view word = text_.substr(start, pos_ - start);
            if (word != "sqrt") {
                pos_ = start;
                fail("unknown name '" + std::string(word) + "' (expected sqrt)");
            }
            std::size_t arg_at = pos_;
            QuadraticSurd arg = sqrt_argument();
            if (!arg.is_rational())
                throw ParseError("nested radicals are not supported", full_, base_ + arg_at);
            Rational r = arg.to_rational();
            if (r.sign() < 0)
                throw ParseError("square root of a negative value", full_, base_ + arg_at);
            return QuadraticSurd::sqrt_of(r, budget_);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    // "sqrt 2" takes the next integer; "sqrt(...)" takes a full expression
    QuadraticSurd sqrt_argument() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            QuadraticSurd v = expression();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            return QuadraticSurd(Rational(integer()));
        fail("expected an integer or ( after sqrt");
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return Int(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    const std::string& full_;
    std::size_t base_;
    const Budget& budget_;
    std::size_t pos_ = 0;
};

}  // namespace

QuadraticSurd parse_surd_expression(std::string_view text, const Budget& budget) {
    const std::string full(text);
    return SurdParser(text, full, 0, budget).parse();
}

RealSpec parse_real_spec(std::string_view text, const Budget& budget) {
    const std::string full(text);
    auto starts_with = [&](std::string_view prefix) {
        return text.size() >= prefix.size() && text.substr(0, prefix.size()) == prefix;
    };
    if (starts_with("rat:")) {
        std::string_view rest = text.substr(4);
        try {
            return RealSpec::rational(Rational::parse(rest));
        } catch (const ParseError& e) {
            throw ParseError(e.message(), full, 4 + e.offset());
        }
    }
    if (starts_with("surd:")) {
        std::string_view rest = text.substr(5);
        return RealSpec::surd(SurdParser(rest, full, 5, budget).parse());
    }
    if (starts_with("stream:")) {
        std::string_view name = text.substr(7);
        if (name == "e") return RealSpec::stream_e();
        throw ParseError("unknown stream '" + std::string(name) + "' (built-in streams: e)", full,
                         7);
    }
    throw ParseError("expected a rat:, surd: or stream: prefix", full, 0);
}

}  // namespace isoverify
