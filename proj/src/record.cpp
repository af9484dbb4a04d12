#include "sextic/record.hpp"

#include <nlohmann/json.hpp>

namespace sextic {

using ordered_json = nlohmann::ordered_json;

std::string OutputRecord::to_json_line() const {
    ordered_json j;
    j["k"] = k;
    j["A"] = A;
    j["B"] = B;
    j["irreducible"] = irreducible;
    if (galois_familiar) j["galois_familiar"] = *galois_familiar;
    if (galois_t) j["galois_t"] = *galois_t;
    if (monogenic) j["monogenic"] = *monogenic;
    j["delta"] = delta;
    j["disc_f"] = disc_f;
    j["disc_g"] = disc_g;
    j["method"] = method;
    j["notes"] = notes;
    return j.dump();
}

std::string OutputRecord::csv_header() {
    return "k,A,B,irreducible,galois_familiar,galois_t,monogenic,delta,disc_f,disc_g";
}

std::string OutputRecord::to_csv_row() const {
    auto b = [](bool v) { return v ? "true" : "false"; };
    std::string row;
    row += std::to_string(k) + "," + std::to_string(A) + "," + std::to_string(B) + ",";
    row += std::string(b(irreducible)) + ",";
    row += (galois_familiar ? *galois_familiar : "") + std::string(",");
    row += (galois_t ? *galois_t : "") + std::string(",");
    row += (monogenic ? std::string(b(*monogenic)) : "") + ",";
    row += delta + "," + disc_f + "," + disc_g;
    return row;
}

OutputRecord make_record(const Classification& c, const std::string& method) {
    OutputRecord r;
    r.k = c.tri.k();
    r.A = c.tri.A().convert_to<long long>();
    r.B = c.tri.B().convert_to<long long>();
    r.irreducible = c.irreducible;
    if (c.galois) {
        r.galois_familiar = familiar_name(*c.galois);
        r.galois_t = t_notation(*c.galois);
    }
    r.monogenic = c.monogenic;
    r.delta = c.delta.str();
    r.disc_f = c.disc_f.str();
    r.disc_g = c.disc_g.str();
    r.method = method;
    r.notes = c.notes;
    return r;
}

} // namespace sextic
