#pragma once

// Text and JSON renderings. Every list is emitted in a fixed order so output
// is byte-stable.

#include <string>

#include <json.hpp>

#include "dbialg/graph.hpp"
#include "dbialg/orientations.hpp"
#include "dbialg/poly.hpp"
#include "dbialg/word.hpp"

namespace dbialg {

using Json = nlohmann::ordered_json;

Json to_json(const Scalar& s);
/// Array of "num/den", index = exponent.
Json to_json(const Poly& p);
/// [{graph, coeff}] sorted by rendered graph.
Json to_json(const GraphElem& x);
/// [{left, right, coeff}] sorted by rendered legs.
Json to_json(const Tensor2<Graph>& t);
/// [{word: [..], coeff}] sorted by (length, lex).
Json to_json(const WordElem& x);
/// [{left: [..], right: [..], coeff}] sorted by (length, lex) of each leg.
Json to_json(const Tensor2<Word>& t);
/// {graph, phi_chr, phi_tilde, sign, ok}
Json to_json(const GZReport& r);

/// "-[2; 0-1] + 2[2;]"; "0" when empty.
std::string to_text(const GraphElem& x);
std::string to_text(const Tensor2<Graph>& t);
/// "1/2(1,2) - 1/2(2,1)"
std::string to_text(const WordElem& x);
std::string to_text(const Tensor2<Word>& t);

}  // namespace dbialg
