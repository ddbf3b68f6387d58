#include "stw/parse.hpp"

#include <cctype>

#include "stw/errors.hpp"

namespace stw::parse {

namespace {

    struct Token {
        enum class Kind { Sq, Iota1, Iota2, SW, Int, Caret, Plus, Bar, LParen, RParen, End };
        Kind kind;
        int value = 0;
        std::size_t pos = 0;
    };

    std::vector<Token> tokenize(const std::string& s)
    {
        std::vector<Token> out;
        std::size_t i = 0;
        auto read_int = [&](std::size_t at) {
            if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                throw ParseError(at, "expected an integer");
            long v = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                v = v * 10 + (s[i] - '0');
                if (v > 1000000)
                    throw ParseError(at, "integer too large");
                ++i;
            }
            return static_cast<int>(v);
        };
        while (i < s.size()) {
            const char c = s[i];
            const std::size_t at = i;
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            if (c == '^') {
                out.push_back({Token::Kind::Caret, 0, at});
                ++i;
            }
            else if (c == '+') {
                out.push_back({Token::Kind::Plus, 0, at});
                ++i;
            }
            else if (c == '|') {
                out.push_back({Token::Kind::Bar, 0, at});
                ++i;
            }
            else if (c == '(') {
                out.push_back({Token::Kind::LParen, 0, at});
                ++i;
            }
            else if (c == ')') {
                out.push_back({Token::Kind::RParen, 0, at});
                ++i;
            }
            else if (c == 'S') {
                if (i + 1 >= s.size() || s[i + 1] != 'q')
                    throw ParseError(at, "unexpected character 'S' (did you mean 'Sq'?)");
                i += 2;
                out.push_back({Token::Kind::Sq, read_int(at), at});
            }
            else if (c == 'i') {
                ++i;
                const int v = read_int(at);
                if (v == 1)
                    out.push_back({Token::Kind::Iota1, 0, at});
                else if (v == 2)
                    out.push_back({Token::Kind::Iota2, 0, at});
                else
                    throw ParseError(at, "only i1 and i2 exist");
            }
            else if (c == 'w') {
                ++i;
                const int v = read_int(at);
                if (v < 1)
                    throw ParseError(at, "w index must be >= 1");
                out.push_back({Token::Kind::SW, v, at});
            }
            else if (std::isdigit(static_cast<unsigned char>(c))) {
                out.push_back({Token::Kind::Int, read_int(at), at});
            }
            else {
                throw ParseError(at, std::string("unexpected character '") + c + "'");
            }
        }
        out.push_back({Token::Kind::End, 0, s.size()});
        return out;
    }

    struct Parser {
        const std::vector<Token>& toks;
        std::size_t at = 0;

        const Token& peek() const { return toks[at]; }
        Token next() { return toks[at++]; }

        std::shared_ptr<Node> make(Node::Kind kind, int value, std::size_t pos)
        {
            auto n = std::make_shared<Node>();
            n->kind = kind;
            n->value = value;
            n->pos = pos;
            return n;
        }

        bool starts_atom(const Token& t) const
        {
            switch (t.kind) {
            case Token::Kind::Sq:
            case Token::Kind::Iota1:
            case Token::Kind::Iota2:
            case Token::Kind::SW:
            case Token::Kind::Int:
            case Token::Kind::LParen:
                return true;
            default:
                return false;
            }
        }

        NodePtr parse_atom()
        {
            const Token t = next();
            switch (t.kind) {
            case Token::Kind::Sq:
                return make(Node::Kind::Sq, t.value, t.pos);
            case Token::Kind::Iota1:
                return make(Node::Kind::Iota1, 0, t.pos);
            case Token::Kind::Iota2:
                return make(Node::Kind::Iota2, 0, t.pos);
            case Token::Kind::SW:
                return make(Node::Kind::SW, t.value, t.pos);
            case Token::Kind::Int:
                return make(Node::Kind::Int, t.value, t.pos);
            case Token::Kind::LParen: {
                NodePtr inner = parse_element();
                if (peek().kind != Token::Kind::RParen)
                    throw ParseError(peek().pos, "expected ')'");
                next();
                return inner;
            }
            default:
                throw ParseError(t.pos, "expected an atom");
            }
        }

        NodePtr parse_factor()
        {
            NodePtr atom = parse_atom();
            if (peek().kind == Token::Kind::Caret) {
                const Token caret = next();
                if (peek().kind != Token::Kind::Int)
                    throw ParseError(peek().pos, "expected an exponent after '^'");
                const Token e = next();
                if (e.value < 0)
                    throw ParseError(e.pos, "negative exponent");
                auto p = make(Node::Kind::Power, e.value, caret.pos);
                p->children.push_back(atom);
                return p;
            }
            return atom;
        }

        NodePtr parse_product()
        {
            if (!starts_atom(peek()))
                throw ParseError(peek().pos, "expected an expression");
            std::vector<NodePtr> factors;
            while (starts_atom(peek()))
                factors.push_back(parse_factor());
            if (factors.size() == 1)
                return factors[0];
            auto p = make(Node::Kind::Product, 0, factors.front()->pos);
            p->children = std::move(factors);
            return p;
        }

        NodePtr parse_summand()
        {
            NodePtr left = parse_product();
            if (peek().kind == Token::Kind::Bar) {
                const Token bar = next();
                NodePtr right = parse_product();
                auto t = make(Node::Kind::Twist, 0, bar.pos);
                t->children.push_back(left);
                t->children.push_back(right);
                return t;
            }
            return left;
        }

        NodePtr parse_element()
        {
            std::vector<NodePtr> summands;
            summands.push_back(parse_summand());
            while (peek().kind == Token::Kind::Plus) {
                next();
                summands.push_back(parse_summand());
            }
            if (summands.size() == 1)
                return summands[0];
            auto s = make(Node::Kind::Sum, 0, summands.front()->pos);
            s->children = std::move(summands);
            return s;
        }
    };

}  // namespace

bool Node::equals(const Node& rhs) const
{
    if (kind != rhs.kind || value != rhs.value || children.size() != rhs.children.size())
        return false;
    for (std::size_t i = 0; i < children.size(); ++i)
        if (!children[i]->equals(*rhs.children[i]))
            return false;
    return true;
}

NodePtr parse(const std::string& input)
{
    const auto toks = tokenize(input);
    Parser parser{toks};
    NodePtr root = parser.parse_element();
    if (parser.peek().kind != Token::Kind::End)
        throw ParseError(parser.peek().pos, "unexpected trailing input");
    return root;
}

std::string ast_render(const Node& node)
{
    switch (node.kind) {
    case Node::Kind::Sum: {
        std::string out;
        for (std::size_t i = 0; i < node.children.size(); ++i) {
            if (i)
                out += " + ";
            out += ast_render(*node.children[i]);
        }
        return out;
    }
    case Node::Kind::Twist:
        return ast_render(*node.children[0]) + " | " + ast_render(*node.children[1]);
    case Node::Kind::Product: {
        std::string out;
        for (std::size_t i = 0; i < node.children.size(); ++i) {
            if (i)
                out += " ";
            const Node& c = *node.children[i];
            const bool wrap = c.kind == Node::Kind::Sum || c.kind == Node::Kind::Twist;
            out += wrap ? "(" + ast_render(c) + ")" : ast_render(c);
        }
        return out;
    }
    case Node::Kind::Power: {
        const Node& c = *node.children[0];
        const bool wrap = c.kind == Node::Kind::Sum || c.kind == Node::Kind::Twist ||
                          c.kind == Node::Kind::Product;
        const std::string base = wrap ? "(" + ast_render(c) + ")" : ast_render(c);
        return base + "^" + std::to_string(node.value);
    }
    case Node::Kind::Sq:
        return "Sq" + std::to_string(node.value);
    case Node::Kind::Iota1:
        return "i1";
    case Node::Kind::Iota2:
        return "i2";
    case Node::Kind::SW:
        return "w" + std::to_string(node.value);
    case Node::Kind::Int:
        return std::to_string(node.value);
    }
    return "?";
}

steenrod::Elem eval_steenrod(const Node& node)
{
    using steenrod::Elem;
    switch (node.kind) {
    case Node::Kind::Sum: {
        Elem out;
        for (const auto& c : node.children)
            out += eval_steenrod(*c);
        return out;
    }
    case Node::Kind::Product: {
        Elem out = Elem::unit();
        for (const auto& c : node.children)
            out = steenrod::mul(out, eval_steenrod(*c));
        return out;
    }
    case Node::Kind::Power: {
        Elem out = Elem::unit();
        const Elem base = eval_steenrod(*node.children[0]);
        for (int i = 0; i < node.value; ++i)
            out = steenrod::mul(out, base);
        return out;
    }
    case Node::Kind::Sq:
        return steenrod::adem_normalize({node.value});
    case Node::Kind::Int:
        return node.value % 2 ? Elem::unit() : Elem::zero();
    case Node::Kind::Iota1:
    case Node::Kind::Iota2:
    case Node::Kind::SW:
        throw ParseError(node.pos, "polynomial generator in a Steenrod context");
    case Node::Kind::Twist:
        throw ParseError(node.pos, "'|' not allowed in a Steenrod context");
    }
    return Elem::zero();
}

namespace {

    bool is_sq_factor(const Node& node)
    {
        if (node.kind == Node::Kind::Sq)
            return true;
        return node.kind == Node::Kind::Power && node.children[0]->kind == Node::Kind::Sq;
    }

    void append_sq_letters(const Node& node, steenrod::Word& pending)
    {
        if (node.kind == Node::Kind::Sq) {
            pending.push_back(node.value);
            return;
        }
        for (int i = 0; i < node.value; ++i)
            pending.push_back(node.children[0]->value);
    }

}  // namespace

unstable::Elem eval_poly(const Node& node, const unstable::Ambient& ambient)
{
    using unstable::Elem;
    switch (node.kind) {
    case Node::Kind::Sum: {
        Elem out(ambient);
        for (const auto& c : node.children)
            out += eval_poly(*c, ambient);
        return out;
    }
    case Node::Kind::Product: {
        // A run of Sq factors acts on the next base factor.
        Elem out = Elem::one(ambient);
        steenrod::Word pending;
        for (const auto& c : node.children) {
            if (is_sq_factor(*c)) {
                append_sq_letters(*c, pending);
                continue;
            }
            const Node* base = c.get();
            int exponent = 1;
            if (c->kind == Node::Kind::Power) {
                exponent = c->value;
                base = c->children[0].get();
            }
            Elem val = eval_poly(*base, ambient);
            if (!pending.empty()) {
                val = unstable::act_word(pending, val);
                pending.clear();
            }
            out = unstable::mul(out, unstable::pow(val, exponent));
        }
        if (!pending.empty())
            throw ParseError(node.pos, "dangling Sq operator in a polynomial context");
        return out;
    }
    case Node::Kind::Power: {
        if (is_sq_factor(node))
            throw ParseError(node.pos, "dangling Sq operator in a polynomial context");
        return unstable::pow(eval_poly(*node.children[0], ambient), node.value);
    }
    case Node::Kind::Iota1:
        if (ambient.kind != unstable::Ambient::Kind::K)
            throw ParseError(node.pos, "i1 lives in the K-type algebra");
        return Elem::gen(ambient, unstable::Gen::iota1());
    case Node::Kind::Iota2:
        if (ambient.kind != unstable::Ambient::Kind::K)
            throw ParseError(node.pos, "i2 lives in the K-type algebra");
        return Elem::gen(ambient, unstable::Gen::iota2());
    case Node::Kind::SW:
        if (ambient.kind != unstable::Ambient::Kind::BO)
            throw ParseError(node.pos, "w generators live in the BO-type algebra");
        if (node.value > ambient.vars)
            throw ParseError(node.pos, "w index exceeds the variable bound");
        return Elem::gen(ambient, unstable::Gen::sw(node.value));
    case Node::Kind::Int:
        return node.value % 2 ? Elem::one(ambient) : Elem::zero(ambient);
    case Node::Kind::Sq:
        throw ParseError(node.pos, "dangling Sq operator in a polynomial context");
    case Node::Kind::Twist:
        throw ParseError(node.pos, "'|' not allowed inside a polynomial expression");
    }
    return Elem::zero(ambient);
}

twisted::Elem eval_twisted(const Node& node)
{
    using twisted::Elem;
    if (node.kind == Node::Kind::Sum) {
        Elem out;
        for (const auto& c : node.children)
            out += eval_twisted(*c);
        return out;
    }
    if (node.kind == Node::Kind::Twist) {
        const unstable::Elem poly = eval_poly(*node.children[0], unstable::Ambient::K());
        const steenrod::Elem sq = eval_steenrod(*node.children[1]);
        Elem out;
        for (const auto& pm : poly.terms())
            for (const auto& sm : sq.terms())
                out.toggle(twisted::Term{pm, sm});
        return out;
    }
    throw ParseError(node.pos, "a twisted term needs exactly one '|'");
}

}  // namespace stw::parse
