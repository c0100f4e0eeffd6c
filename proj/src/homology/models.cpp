#include "alex3/homology/models.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "alex3/errors.hpp"

namespace alex3 {

SimplicialComplex rp2_minimal() {
    return {2,
            {{0, 1, 2},
             {0, 1, 3},
             {0, 2, 4},
             {0, 3, 5},
             {0, 4, 5},
             {1, 2, 5},
             {1, 3, 4},
             {1, 4, 5},
             {2, 3, 4},
             {2, 3, 5}}};
}

SimplicialComplex s3_model() {
    SimplicialComplex out;
    out.dimension = 3;
    for (int drop = 4; drop >= 0; --drop) {
        std::vector<int> f;
        for (int v = 0; v < 5; ++v)
            if (v != drop)
                f.push_back(v);
        out.facets.push_back(std::move(f));
    }
    std::sort(out.facets.begin(), out.facets.end());
    return out;
}

namespace {

// Monotone-path triangulation of triangle x edge; vertex (a, b) -> a*3 + b.
void product_tetrahedra(const std::vector<int>& tri, const std::vector<int>& edge,
                        std::set<std::vector<int>>& out) {
    auto id = [](int a, int b) { return a * 3 + b; };
    // paths from (0,0) to (2,1): choose which of the three steps advances the edge
    for (int estep = 0; estep < 3; ++estep) {
        std::vector<int> tet;
        int i = 0;
        int j = 0;
        tet.push_back(id(tri[i], edge[j]));
        for (int step = 0; step < 3; ++step) {
            if (step == estep)
                ++j;
            else
                ++i;
            tet.push_back(id(tri[i], edge[j]));
        }
        std::sort(tet.begin(), tet.end());
        out.insert(tet);
    }
}

} // namespace

SimplicialComplex s2xs1_model() {
    std::vector<std::vector<int>> triangles;
    for (int drop = 0; drop < 4; ++drop) {
        std::vector<int> t;
        for (int v = 0; v < 4; ++v)
            if (v != drop)
                t.push_back(v);
        triangles.push_back(std::move(t));
    }
    std::vector<std::vector<int>> edges = {{0, 1}, {0, 2}, {1, 2}};

    std::set<std::vector<int>> tets;
    for (const std::vector<int>& tri : triangles)
        for (const std::vector<int>& edge : edges)
            product_tetrahedra(tri, edge, tets);

    SimplicialComplex out;
    out.dimension = 3;
    out.facets.assign(tets.begin(), tets.end());
    return out;
}

SimplicialComplex realize_suspension_sum(int r) {
    if (r < 1)
        throw DomainError("suspension sum needs r >= 1");
    SimplicialComplex block = suspend(rp2_minimal());
    SimplicialComplex out = block;
    for (int i = 1; i < r; ++i)
        out = connected_sum(out, block);
    return out;
}

std::optional<SimplicialComplex> model_by_name(const std::string& expr) {
    if (expr == "rp2")
        return rp2_minimal();
    if (expr == "sus_rp2")
        return suspend(rp2_minimal());
    if (expr == "s3")
        return s3_model();
    if (expr == "s2xs1" || expr == "s2xs1:none")
        return s2xs1_model();

    const std::string prefix = "sus_rp2^";
    if (expr.size() > prefix.size() && expr.compare(0, prefix.size(), prefix) == 0) {
        std::string digits = expr.substr(prefix.size());
        if (!digits.empty() && digits.size() <= 2 &&
            std::all_of(digits.begin(), digits.end(),
                        [](unsigned char c) { return std::isdigit(c); })) {
            int k = std::stoi(digits);
            if (k >= 1)
                return realize_suspension_sum(k);
        }
    }
    return std::nullopt;
}

} // namespace alex3
