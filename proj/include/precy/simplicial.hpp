#pragma once

#include <set>
#include <string>
#include <vector>

#include "precy/lincomb.hpp"

namespace precy {

// A simplex is its strictly increasing vertex tuple.
using Simplex = std::vector<int>;

using SimpChain = LinComb<Simplex>;

// Simplicial boundary, del(v0..vn) = sum_i (-1)^i (v0..\hat v_i..vn).
SimpChain simplicial_boundary(const Simplex& s);

struct OrderedComplex {
    std::vector<int> vertices;           // sorted
    std::set<Simplex> simplices;         // closed under faces
    SimpChain fundamental_chain;         // top-degree cycle
    int dim = -1;

    bool has(const Simplex& s) const { return simplices.count(s) > 0; }
};

// Checks face closure and vertex membership; throws std::invalid_argument on
// structural problems.
void validate_complex(const OrderedComplex& K);

// Fundamental chain must be supported in top dimension and be a cycle.
bool validate_fundamental_chain(const OrderedComplex& K, std::string* why = nullptr);

// Parses the JSON document format:
// {"vertices":[0,1,2], "simplices":[[0],[1],[0,1],...],
//  "fundamental_chain":[{"simplex":[0,1],"coeff":"1"},...]}
OrderedComplex load_complex(const std::string& json_text);

// Triangle boundary: the minimal oriented circle. Fundamental chain
// (01) + (12) - (02).
OrderedComplex make_circle();

// Full triangle including the 2-cell; fundamental chain is (012).
OrderedComplex make_two_simplex();

} // namespace precy
