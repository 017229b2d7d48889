#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "extlab/cocycle.hpp"
#include "extlab/integer.hpp"

namespace extlab {

// A tabulated cocycle or Cayley table ready for export. Window and entries
// are pre-rendered strings in the deterministic element order; entries run
// row-major over the window.
struct TableDoc {
    std::string kind;
    std::optional<Int> prime;
    std::optional<int> modulus;
    std::optional<std::string> alpha;  // digit list in the textual grammar
    std::optional<std::string> pi;
    std::string domain_desc;
    std::string codomain_desc;
    std::vector<std::string> window;
    std::vector<std::array<std::string, 3>> entries;  // u, v, value
};

void write_json(std::ostream& os, const TableDoc& doc);
void write_csv(std::ostream& os, const TableDoc& doc);

template <Carrier C, Carrier A>
TableDoc tabulate(const Cocycle<C, A>& f, std::vector<typename C::value_type> window,
                  std::string kind) {
    std::sort(window.begin(), window.end(),
              [&](const auto& a, const auto& b) { return f.domain.less(a, b); });
    TableDoc doc;
    doc.kind = std::move(kind);
    doc.domain_desc = f.domain.desc();
    doc.codomain_desc = f.codomain.desc();
    for (const auto& u : window) doc.window.push_back(f.domain.str(u));
    for (const auto& u : window)
        for (const auto& v : window)
            doc.entries.push_back({f.domain.str(u), f.domain.str(v), f.codomain.str(f(u, v))});
    return doc;
}

// Cayley table of a carrier: the value column holds the rendered sum.
template <Carrier G>
TableDoc tabulate_cayley(const G& g, std::vector<typename G::value_type> window,
                         std::string kind) {
    std::sort(window.begin(), window.end(),
              [&](const auto& a, const auto& b) { return g.less(a, b); });
    TableDoc doc;
    doc.kind = std::move(kind);
    doc.domain_desc = g.desc();
    doc.codomain_desc = g.desc();
    for (const auto& u : window) doc.window.push_back(g.str(u));
    for (const auto& u : window)
        for (const auto& v : window)
            doc.entries.push_back({g.str(u), g.str(v), g.str(g.add(u, v))});
    return doc;
}

}  // namespace extlab
