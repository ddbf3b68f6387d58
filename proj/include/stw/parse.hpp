#pragma once

#include <memory>
#include <string>
#include <vector>

#include "stw/steenrod.hpp"
#include "stw/twisted.hpp"
#include "stw/unstable.hpp"

namespace stw::parse {

// Grammar:
//   element := summand ('+' summand)*
//   summand := product ('|' product)?     (the twisted separator)
//   product := factor+
//   factor  := atom ('^' INT)?
//   atom    := 'Sq'INT | 'i1' | 'i2' | 'w'INT | INT | '(' element ')'
// Integer literals are taken mod 2. In a polynomial context a run of Sq
// factors applies to the next base factor: "Sq2 Sq1 i2" is the generator
// Sq2 Sq1 (iota_2), and "Sq1 i2^2" is (Sq1 iota_2)^2.
struct Node {
    enum class Kind { Sum, Product, Power, Twist, Sq, Iota1, Iota2, SW, Int };

    Kind kind;
    int value = 0;  // Sq/SW index, Int literal, Power exponent
    std::size_t pos = 0;
    std::vector<std::shared_ptr<const Node>> children;

    bool equals(const Node& rhs) const;
};

using NodePtr = std::shared_ptr<const Node>;

NodePtr parse(const std::string& input);  // throws ParseError

std::string ast_render(const Node& node);

steenrod::Elem eval_steenrod(const Node& node);
unstable::Elem eval_poly(const Node& node, const unstable::Ambient& ambient);
twisted::Elem eval_twisted(const Node& node);

}  // namespace stw::parse
