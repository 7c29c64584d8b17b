#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "potseq/graph.hpp"

namespace potseq {

namespace detail {

// Recursive-descent parser for the target DSL:
//   expr   := term ('u' term)*            disjoint union
//   term   := factor ('-' factor)*        K_m minus an embedded subgraph
//   factor := INT atom | atom             INT-fold disjoint copies
//   atom   := 'K' INT ['_' INT] | 'C' INT | 'P' INT | 'Z4' | 'e' | '(' expr ')'
// Examples: "K5-Z4", "K6-(P2uK2)", "2K2", "K5-K1_2", "K5-(K4-e)", "C4".
struct TargetParser {
    const std::string& text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("bad target '" + text + "': " + what);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected integer at position " + std::to_string(start));
        return std::stoi(text.substr(start, pos - start));
    }

    SimpleGraph expr() {
        SimpleGraph g = term();
        while (peek() == 'u' || peek() == 'U') {
            ++pos;
            g = disjoint_union(g, term());
        }
        return g;
    }

    SimpleGraph term() {
        SimpleGraph g = factor();
        while (eat('-')) {
            const int m = g.order();
            if (g.edge_count() != m * (m - 1) / 2)
                fail("minus applies to a complete graph only");
            SimpleGraph h = factor();
            if (h.order() > m) fail("subtrahend does not fit in K" + std::to_string(m));
            g = complete_minus(m, h);
        }
        return g;
    }

    SimpleGraph factor() {
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const int count = integer();
            if (count < 1) fail("copy count must be positive");
            return disjoint_copies(atom(), count);
        }
        return atom();
    }

    SimpleGraph atom() {
        const char c = peek();
        switch (c) {
            case 'K': {
                ++pos;
                const int k = integer();
                if (peek() == '_') {
                    ++pos;
                    if (k != 1) fail("star notation is K1_t");
                    return star(integer());
                }
                return complete(k);
            }
            case 'C': {
                ++pos;
                return cycle(integer());
            }
            case 'P': {
                ++pos;
                return path_paper(integer());
            }
            case 'Z': {
                ++pos;
                if (!eat('4')) fail("unknown Z token (only Z4)");
                return complete_minus(4, path_paper(2));
            }
            case 'e': {
                ++pos;
                return complete(2);
            }
            case '(': {
                ++pos;
                SimpleGraph g = expr();
                if (!eat(')')) fail("missing ')'");
                return g;
            }
            default:
                fail(std::string("unexpected token '") + c + "'");
        }
    }
};

}  // namespace detail

/// A pattern graph to seek inside realizations: parsed from the DSL, loaded
/// from a graph file ("@path"), or given explicitly.
class TargetSpec {
public:
    enum class Kind { explicit_graph, complete_minus, named };

    static TargetSpec parse(const std::string& text) {
        std::string trimmed = text;
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
            trimmed.erase(trimmed.begin());
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
            trimmed.pop_back();
        if (trimmed.empty()) throw std::invalid_argument("empty target");
        if (trimmed.front() == '@') {
            const std::string path = trimmed.substr(1);
            std::ifstream in(path);
            if (!in) throw std::invalid_argument("cannot open target file '" + path + "'");
            return TargetSpec(parse_graph(in), trimmed, Kind::explicit_graph);
        }
        detail::TargetParser parser{trimmed};
        SimpleGraph g = parser.expr();
        if (parser.peek() != '\0')
            parser.fail("trailing input at position " + std::to_string(parser.pos));
        const Kind kind =
            trimmed.find('-') != std::string::npos ? Kind::complete_minus : Kind::named;
        return TargetSpec(std::move(g), trimmed, kind);
    }

    static TargetSpec from_graph(SimpleGraph g) {
        return TargetSpec(std::move(g), "explicit", Kind::explicit_graph);
    }

    const SimpleGraph& pattern() const { return pattern_; }
    const std::string& token() const { return token_; }
    Kind kind() const { return kind_; }

private:
    TargetSpec(SimpleGraph g, std::string token, Kind kind)
        : pattern_(std::move(g)), token_(std::move(token)), kind_(kind) {}

    SimpleGraph pattern_;
    std::string token_;
    Kind kind_;
};

}  // namespace potseq
