#include "precy/simplicial.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace precy {

SimpChain simplicial_boundary(const Simplex& s) {
    SimpChain out;
    if (s.size() <= 1) return out;
    for (size_t i = 0; i < s.size(); ++i) {
        Simplex face;
        face.reserve(s.size() - 1);
        for (size_t j = 0; j < s.size(); ++j)
            if (j != i) face.push_back(s[j]);
        out.add(face, (i % 2 == 0) ? Scalar(1) : Scalar(-1));
    }
    return out;
}

void validate_complex(const OrderedComplex& K) {
    std::set<int> vs(K.vertices.begin(), K.vertices.end());
    if (vs.size() != K.vertices.size())
        throw std::invalid_argument("duplicate vertices");
    for (const auto& s : K.simplices) {
        if (s.empty()) throw std::invalid_argument("empty simplex");
        if (!std::is_sorted(s.begin(), s.end()) ||
            std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("simplex vertices must be strictly increasing");
        for (int v : s)
            if (!vs.count(v)) throw std::invalid_argument("simplex uses unknown vertex");
        if (s.size() >= 2) {
            for (size_t i = 0; i < s.size(); ++i) {
                Simplex face;
                for (size_t j = 0; j < s.size(); ++j)
                    if (j != i) face.push_back(s[j]);
                if (!K.has(face))
                    throw std::invalid_argument("complex not closed under faces");
            }
        }
    }
}

bool validate_fundamental_chain(const OrderedComplex& K, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (K.fundamental_chain.is_zero()) return fail("fundamental chain is zero");
    for (const auto& [s, c] : K.fundamental_chain.terms()) {
        if (!K.has(s)) return fail("chain uses a simplex outside the complex");
        if (static_cast<int>(s.size()) - 1 != K.dim)
            return fail("chain not supported in top dimension");
    }
    SimpChain bd;
    for (const auto& [s, c] : K.fundamental_chain.terms()) {
        SimpChain piece = simplicial_boundary(s);
        piece *= c;
        bd += piece;
    }
    if (!bd.is_zero()) return fail("fundamental chain is not a cycle");
    return true;
}

OrderedComplex load_complex(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    OrderedComplex K;
    for (const auto& v : j.at("vertices")) K.vertices.push_back(v.get<int>());
    std::sort(K.vertices.begin(), K.vertices.end());
    for (const auto& s : j.at("simplices")) {
        Simplex sx = s.get<std::vector<int>>();
        K.dim = std::max(K.dim, static_cast<int>(sx.size()) - 1);
        K.simplices.insert(std::move(sx));
    }
    if (j.contains("fundamental_chain")) {
        for (const auto& t : j.at("fundamental_chain")) {
            Simplex sx = t.at("simplex").get<std::vector<int>>();
            K.fundamental_chain.add(sx, parse_scalar(t.at("coeff").get<std::string>()));
        }
    }
    validate_complex(K);
    return K;
}

OrderedComplex make_circle() {
    OrderedComplex K;
    K.vertices = {0, 1, 2};
    K.simplices = {{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 2}};
    K.dim = 1;
    K.fundamental_chain.add({0, 1}, Scalar(1));
    K.fundamental_chain.add({1, 2}, Scalar(1));
    K.fundamental_chain.add({0, 2}, Scalar(-1));
    return K;
}

OrderedComplex make_two_simplex() {
    OrderedComplex K = make_circle();
    K.simplices.insert({0, 1, 2});
    K.dim = 2;
    // a disk has no fundamental cycle; the top cell is still the chain of
    // interest for boundary computations
    K.fundamental_chain = SimpChain();
    return K;
}

} // namespace precy
