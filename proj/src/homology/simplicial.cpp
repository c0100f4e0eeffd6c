#include "alex3/homology/simplicial.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "alex3/errors.hpp"

namespace alex3 {

void validate_complex(const SimplicialComplex& k) {
    if (k.dimension < 0)
        throw DomainError("complex dimension must be non-negative");
    if (k.facets.empty())
        throw DomainError("complex has no facets");
    std::set<std::vector<int>> seen;
    for (const std::vector<int>& f : k.facets) {
        if (static_cast<int>(f.size()) != k.dimension + 1)
            throw DomainError("facet size does not match dimension+1");
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] < 0)
                throw DomainError("negative vertex id");
            if (i > 0 && f[i - 1] >= f[i])
                throw DomainError("facet vertices must be strictly increasing");
        }
        if (!seen.insert(f).second)
            throw DomainError("duplicate facet");
    }
}

std::vector<int> vertices_of(const SimplicialComplex& k) {
    std::set<int> vs;
    for (const std::vector<int>& f : k.facets)
        vs.insert(f.begin(), f.end());
    return {vs.begin(), vs.end()};
}

namespace {

void subsets_of(const std::vector<int>& facet, std::size_t size, std::size_t from,
                std::vector<int>& current, std::set<std::vector<int>>& out) {
    if (current.size() == size) {
        out.insert(current);
        return;
    }
    for (std::size_t i = from; i + (size - current.size()) <= facet.size(); ++i) {
        current.push_back(facet[i]);
        subsets_of(facet, size, i + 1, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> faces(const SimplicialComplex& k, int dim) {
    validate_complex(k);
    if (dim < 0 || dim > k.dimension)
        throw DomainError("face dimension out of range");
    std::set<std::vector<int>> out;
    std::vector<int> scratch;
    for (const std::vector<int>& f : k.facets)
        subsets_of(f, dim + 1, 0, scratch, out);
    return {out.begin(), out.end()};
}

std::int64_t euler_characteristic(const SimplicialComplex& k) {
    std::int64_t chi = 0;
    std::int64_t sign = 1;
    for (int d = 0; d <= k.dimension; ++d) {
        chi += sign * static_cast<std::int64_t>(faces(k, d).size());
        sign = -sign;
    }
    return chi;
}

ChainComplex chain_complex(const SimplicialComplex& k) {
    validate_complex(k);
    ChainComplex c;
    c.cells.resize(k.dimension + 1);
    for (int d = 0; d <= k.dimension; ++d)
        c.cells[d] = faces(k, d);

    c.boundary.resize(k.dimension + 1);
    c.boundary[0] = IntegerMatrix(0, c.cells[0].size());
    for (int d = 1; d <= k.dimension; ++d) {
        std::map<std::vector<int>, std::size_t> index;
        for (std::size_t i = 0; i < c.cells[d - 1].size(); ++i)
            index.emplace(c.cells[d - 1][i], i);

        IntegerMatrix m(c.cells[d - 1].size(), c.cells[d].size());
        for (std::size_t j = 0; j < c.cells[d].size(); ++j) {
            const std::vector<int>& cell = c.cells[d][j];
            int sign = 1;
            std::vector<int> face;
            for (std::size_t drop = 0; drop < cell.size(); ++drop) {
                face.clear();
                for (std::size_t i = 0; i < cell.size(); ++i)
                    if (i != drop)
                        face.push_back(cell[i]);
                m.at(index.at(face), j) = sign;
                sign = -sign;
            }
        }
        c.boundary[d] = std::move(m);
    }
    return c;
}

bool boundary_squares_to_zero(const ChainComplex& c) {
    for (std::size_t d = 2; d < c.boundary.size(); ++d) {
        IntegerMatrix zero(c.boundary[d - 1].rows(), c.boundary[d].cols());
        if (multiply(c.boundary[d - 1], c.boundary[d]) != zero)
            return false;
    }
    return true;
}

std::string group_to_string(const AbelianGroupDecomp& g) {
    std::vector<std::string> parts;
    if (g.rank == 1)
        parts.push_back("Z");
    else if (g.rank > 1)
        parts.push_back("Z^" + std::to_string(g.rank));
    for (std::int64_t t : g.torsion)
        parts.push_back("Z/" + std::to_string(t));
    if (parts.empty())
        return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i)
        out += " + " + parts[i];
    return out;
}

std::vector<AbelianGroupDecomp> homology_groups(const ChainComplex& c) {
    if (c.cells.empty())
        throw DomainError("empty chain complex");
    if (!boundary_squares_to_zero(c))
        throw DomainError("boundary maps do not compose to zero");

    int dim = static_cast<int>(c.cells.size()) - 1;
    std::vector<std::size_t> rank(dim + 2, 0);
    std::vector<std::vector<std::int64_t>> torsion(dim + 2);
    for (int d = 1; d <= dim; ++d) {
        SNFResult snf = smith_normal_form(c.boundary[d]);
        rank[d] = snf_rank(snf);
        for (const mpz_class& z : torsion_factors(snf)) {
            if (!z.fits_slong_p())
                throw DomainError("torsion factor exceeds 64 bits");
            torsion[d].push_back(z.get_si());
        }
    }

    std::vector<AbelianGroupDecomp> h(dim + 1);
    for (int n = 0; n <= dim; ++n) {
        h[n].rank = static_cast<std::int64_t>(c.cells[n].size()) -
                    static_cast<std::int64_t>(rank[n]) - static_cast<std::int64_t>(rank[n + 1]);
        h[n].torsion = torsion[n + 1];
    }
    return h;
}

std::vector<AbelianGroupDecomp> homology(const SimplicialComplex& k) {
    return homology_groups(chain_complex(k));
}

SimplicialComplex suspend(const SimplicialComplex& k) {
    validate_complex(k);
    int top = vertices_of(k).back();
    int north = top + 1;
    int south = top + 2;

    SimplicialComplex out;
    out.dimension = k.dimension + 1;
    for (const std::vector<int>& f : k.facets) {
        std::vector<int> g = f;
        g.push_back(north);
        out.facets.push_back(g);
        g.back() = south;
        out.facets.push_back(std::move(g));
    }
    std::sort(out.facets.begin(), out.facets.end());
    return out;
}

SimplicialComplex vertex_link(const SimplicialComplex& k, int v) {
    validate_complex(k);
    if (k.dimension == 0)
        throw DomainError("links are undefined for 0-complexes");

    SimplicialComplex link;
    link.dimension = k.dimension - 1;
    for (const std::vector<int>& f : k.facets) {
        if (!std::binary_search(f.begin(), f.end(), v))
            continue;
        std::vector<int> g;
        for (int w : f)
            if (w != v)
                g.push_back(w);
        link.facets.push_back(std::move(g));
    }
    if (link.facets.empty())
        throw DomainError("vertex " + std::to_string(v) + " is not in the complex");
    std::sort(link.facets.begin(), link.facets.end());
    return link;
}

namespace {

enum class LinkClass { Sphere, ProjectivePlane };

LinkClass classify_link(const SimplicialComplex& k, int v) {
    static const std::vector<AbelianGroupDecomp> sphere = {{1, {}}, {0, {}}, {1, {}}};
    static const std::vector<AbelianGroupDecomp> rp2 = {{1, {}}, {0, {2}}, {0, {}}};
    SimplicialComplex link = vertex_link(k, v);
    if (link.dimension == 2) {
        std::vector<AbelianGroupDecomp> h = homology(link);
        if (h == sphere)
            return LinkClass::Sphere;
        if (h == rp2)
            return LinkClass::ProjectivePlane;
    }
    throw MalformedLinkError("link of vertex " + std::to_string(v) +
                             " is neither a 2-sphere nor a projective plane");
}

std::map<int, LinkClass> classify_all_links(const SimplicialComplex& k) {
    std::map<int, LinkClass> out;
    for (int v : vertices_of(k))
        out.emplace(v, classify_link(k, v));
    return out;
}

int facet_singular_count(const std::vector<int>& f, const std::map<int, LinkClass>& links) {
    int n = 0;
    for (int v : f)
        if (links.at(v) == LinkClass::ProjectivePlane)
            ++n;
    return n;
}

// Replace the facet by its four cone pieces over a fresh center vertex.
void stellar_subdivide(SimplicialComplex& k, std::vector<int> target) {
    int center = vertices_of(k).back() + 1;
    std::vector<std::vector<int>> next;
    for (const std::vector<int>& f : k.facets)
        if (f != target)
            next.push_back(f);
    for (std::size_t drop = 0; drop < target.size(); ++drop) {
        std::vector<int> g;
        for (std::size_t i = 0; i < target.size(); ++i)
            if (i != drop)
                g.push_back(target[i]);
        g.push_back(center);
        next.push_back(std::move(g));
    }
    std::sort(next.begin(), next.end());
    k.facets = std::move(next);
}

// The complex (subdivided as needed) together with its lex-least facet whose
// vertices all carry sphere links. Each subdivision replaces the facet with
// the fewest projective-plane vertices; the fresh center always has a sphere
// link, so that count strictly drops and the loop ends.
std::pair<SimplicialComplex, std::vector<int>> with_regular_facet(SimplicialComplex k,
                                                                  bool refine) {
    for (;;) {
        std::map<int, LinkClass> links = classify_all_links(k);
        std::optional<std::vector<int>> best;
        for (const std::vector<int>& f : k.facets)
            if (facet_singular_count(f, links) == 0 && (!best || f < *best))
                best = f;
        if (best)
            return {std::move(k), std::move(*best)};
        if (!refine)
            throw NoRegularFacetError("every facet touches a singular vertex");

        const std::vector<int>* target = nullptr;
        int fewest = 0;
        for (const std::vector<int>& f : k.facets) {
            int n = facet_singular_count(f, links);
            if (!target || n < fewest) {
                target = &f;
                fewest = n;
            }
        }
        stellar_subdivide(k, *target);
    }
}

} // namespace

SimplicialComplex connected_sum(const SimplicialComplex& a, const SimplicialComplex& b,
                                bool refine) {
    validate_complex(a);
    validate_complex(b);
    if (a.dimension != 3 || b.dimension != 3)
        throw DomainError("connected sum is defined for pure 3-complexes");

    auto [ka, fa] = with_regular_facet(a, refine);
    auto [kb, fb] = with_regular_facet(b, refine);

    std::map<int, int> remap;
    for (std::size_t i = 0; i < fa.size(); ++i)
        remap.emplace(fb[i], fa[i]);
    int next = vertices_of(ka).back() + 1;
    for (int v : vertices_of(kb))
        if (remap.emplace(v, next).second)
            ++next;

    SimplicialComplex out;
    out.dimension = 3;
    for (const std::vector<int>& f : ka.facets)
        if (f != fa)
            out.facets.push_back(f);
    for (const std::vector<int>& f : kb.facets) {
        if (f == fb)
            continue;
        std::vector<int> g;
        for (int v : f)
            g.push_back(remap.at(v));
        std::sort(g.begin(), g.end());
        out.facets.push_back(std::move(g));
    }
    std::sort(out.facets.begin(), out.facets.end());
    return out;
}

std::int64_t singular_vertex_count(const SimplicialComplex& k) {
    validate_complex(k);
    if (k.dimension != 3)
        throw DomainError("singular vertex count is defined for pure 3-complexes");
    std::int64_t count = 0;
    for (int v : vertices_of(k))
        if (classify_link(k, v) == LinkClass::ProjectivePlane)
            ++count;
    return count;
}

} // namespace alex3
