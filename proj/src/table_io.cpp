#include "extlab/table_io.hpp"

#include "json.hpp"

namespace extlab {

void write_json(std::ostream& os, const TableDoc& doc) {
    nlohmann::ordered_json j;
    j["kind"] = doc.kind;
    j["prime"] = nullptr;
    if (doc.prime) j["prime"] = doc.prime->convert_to<long long>();
    if (doc.modulus) j["modulus"] = *doc.modulus;
    if (doc.alpha) j["alpha"] = *doc.alpha;
    if (doc.pi) j["pi"] = *doc.pi;
    j["carrier"] = {{"domain", doc.domain_desc}, {"codomain", doc.codomain_desc}};
    j["window"] = doc.window;
    auto entries = nlohmann::ordered_json::array();
    for (const auto& e : doc.entries) entries.push_back({e[0], e[1], e[2]});
    j["entries"] = std::move(entries);
    os << j.dump(2) << '\n';
}

void write_csv(std::ostream& os, const TableDoc& doc) {
    os << "u,v,value\n";
    for (const auto& e : doc.entries) os << e[0] << ',' << e[1] << ',' << e[2] << '\n';
}

}  // namespace extlab
