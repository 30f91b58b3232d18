#pragma once

// Recursive-descent reader for algebra expressions.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)*
//   atom   := rational | ident | '(' expr ')'
//
// Whitespace is insignificant. A rational literal is digits with an optional
// "/digits" denominator. Evaluation is delegated to an Ops policy so the same
// grammar builds algebra elements and linear combinations of Lie basis
// vectors.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "element.hpp"

namespace superhopf {

template <class Ops>
concept ExpressionOps = requires(const Ops& ops, typename Ops::value_type v, Scalar c, std::string_view name,
                                 std::size_t pos) {
    { ops.constant(c) } -> std::same_as<typename Ops::value_type>;
    { ops.symbol(name, pos) } -> std::same_as<typename Ops::value_type>;
    { ops.add(v, v) } -> std::same_as<typename Ops::value_type>;
    { ops.multiply(v, v, pos) } -> std::same_as<typename Ops::value_type>;
    { ops.negate(v) } -> std::same_as<typename Ops::value_type>;
};

namespace detail {

template <ExpressionOps Ops>
class ExpressionReader {
public:
    using Value = typename Ops::value_type;

    ExpressionReader(std::string_view text, const Ops& ops) : text_(text), ops_(ops) {}

    Value parse()
    {
        Value v = expr();
        skip();
        if (pos_ != text_.size())
            throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return v;
    }

private:
    static constexpr int max_exponent = 64;

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Value expr()
    {
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        Value acc = term();
        if (negate)
            acc = ops_.negate(acc);
        for (;;) {
            if (accept('+'))
                acc = ops_.add(acc, term());
            else if (accept('-'))
                acc = ops_.add(acc, ops_.negate(term()));
            else
                return acc;
        }
    }

    Value term()
    {
        Value acc = factor();
        for (;;) {
            skip();
            const std::size_t at = pos_;
            if (!accept('*'))
                return acc;
            acc = ops_.multiply(acc, factor(), at);
        }
    }

    Value factor()
    {
        Value base = atom();
        for (;;) {
            skip();
            const std::size_t at = pos_;
            if (!accept('^'))
                return base;
            skip();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                throw ParseError("expected exponent", pos_);
            const std::string digits(text_.substr(start, pos_ - start));
            if (digits.size() > 2 || std::stoi(digits) > max_exponent)
                throw ParseError("exponent too large", start);
            const int n = std::stoi(digits);
            Value r = ops_.constant(Scalar(1));
            for (int k = 0; k < n; ++k)
                r = ops_.multiply(r, base, at);
            base = r;
        }
    }

    Value atom()
    {
        skip();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of expression", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (!accept(')'))
                throw ParseError("expected ')'", pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                ++pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            }
            const auto literal = text_.substr(start, pos_ - start);
            try {
                return ops_.constant(parse_scalar(literal));
            } catch (const InputError&) {
                throw ParseError("bad rational literal '" + std::string(literal) + "'", start);
            }
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return ops_.symbol(text_.substr(start, pos_ - start), start);
        }
        throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
    }

    std::string_view text_;
    const Ops& ops_;
    std::size_t pos_ = 0;
};

} // namespace detail

template <ExpressionOps Ops>
typename Ops::value_type parse_expression(std::string_view text, const Ops& ops)
{
    return detail::ExpressionReader<Ops>(text, ops).parse();
}

// Evaluates expressions as elements of a presented algebra.
struct ElementOps {
    using value_type = Element;
    PresentationPtr p;

    Element constant(const Scalar& c) const { return Element::scalar(p, c); }
    Element symbol(std::string_view name, std::size_t pos) const
    {
        auto i = p->find(name);
        if (!i)
            throw ParseError("unknown generator '" + std::string(name) + "'", pos);
        return Element::generator(p, *i);
    }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element multiply(const Element& a, const Element& b, std::size_t) const { return a * b; }
    Element negate(const Element& a) const { return -a; }
};

inline Element parse_element(const PresentationPtr& p, std::string_view text)
{
    return parse_expression(text, ElementOps{p});
}

// Splits "a, b*c, 1" into expressions; commas never occur inside one.
inline std::vector<Element> parse_element_list(const PresentationPtr& p, std::string_view text)
{
    std::vector<Element> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(parse_element(p, piece));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

} // namespace superhopf
