#include "sbl/json_io.hpp"
#include <sstream>

namespace sbl {

using nlohmann::json;

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        os << "/" << boost::multiprecision::denominator(r);
    return os.str();
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_number()) {
        ExtRat e = ExtRat::from_double(j.get<double>());
        return e.value();
    }
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos)
                return Rat(boost::multiprecision::cpp_int(s));
            return Rat(boost::multiprecision::cpp_int(s.substr(0, slash)),
                       boost::multiprecision::cpp_int(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument("json: malformed rational '" + s + "'");
        }
    }
    throw std::invalid_argument("json: expected a rational (number or \"p/q\")");
}

json extrat_to_json(const ExtRat& e) {
    if (e.is_neg_inf()) return "-inf";
    if (e.is_pos_inf()) return "inf";
    return rat_str(e.value());
}

ExtRat extrat_from_json(const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "-inf") return ExtRat::neg_inf();
        if (s == "inf" || s == "+inf") return ExtRat::pos_inf();
    }
    return ExtRat(rat_from_json(j));
}

json dims_to_json(const GradedDims& d) {
    json out = json::object();
    for (const auto& [deg, n] : d.entries()) out[std::to_string(deg)] = n;
    return out;
}

GradedDims dims_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("json: dims must be an object");
    GradedDims out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out.add(std::stoi(it.key()), it.value().get<std::int64_t>());
    return out;
}

static FieldTag field_from_json(const json& j) {
    std::string s = j.get<std::string>();
    if (s == "f2") return FieldTag::F2;
    if (s == "q") return FieldTag::Q;
    throw std::invalid_argument("json: field must be \"f2\" or \"q\"");
}

json sheaf_to_json(const SheafOnR& f) {
    json arr = json::array();
    for (const auto& s : f.summands)
        arr.push_back({{"left", extrat_to_json(s.left)},
                       {"left_closed", s.left_closed},
                       {"right", extrat_to_json(s.right)},
                       {"right_closed", s.right_closed},
                       {"shift", s.shift},
                       {"mult", s.mult}});
    return {{"field", field_name(f.field)}, {"summands", arr}};
}

SheafOnR sheaf_from_json(const json& j) {
    if (!j.is_object() || !j.contains("summands") || !j["summands"].is_array())
        throw std::invalid_argument("json: sheaf must be {field, summands:[...]}");
    SheafOnR f(j.contains("field") ? field_from_json(j["field"]) : FieldTag::F2);
    for (const auto& e : j["summands"]) {
        IntervalSummand s;
        s.left = extrat_from_json(e.at("left"));
        s.right = extrat_from_json(e.at("right"));
        s.left_closed = e.value("left_closed", true);
        s.right_closed = e.value("right_closed", false);
        s.shift = e.value("shift", 0);
        s.mult = e.value("mult", std::int64_t(1));
        s.validate();
        f.summands.push_back(std::move(s));
    }
    return f;
}

json barcode_to_json(const Barcode& b) {
    json arr = json::array();
    for (const auto& bar : b.bars)
        arr.push_back({{"birth", extrat_to_json(bar.birth)},
                       {"death", extrat_to_json(bar.death)},
                       {"degree", bar.degree},
                       {"mult", bar.mult}});
    return {{"field", field_name(b.field)}, {"bars", arr}};
}

Barcode barcode_from_json(const json& j) {
    if (!j.is_object() || !j.contains("bars"))
        throw std::invalid_argument("json: barcode must be {field, bars:[...]}");
    Barcode b;
    b.field = j.contains("field") ? field_from_json(j["field"]) : FieldTag::F2;
    for (const auto& e : j["bars"]) {
        GradedInterval bar;
        bar.birth = extrat_from_json(e.at("birth"));
        bar.death = extrat_from_json(e.at("death"));
        bar.degree = e.value("degree", 0);
        bar.mult = e.value("mult", std::int64_t(1));
        bar.validate();
        b.bars.push_back(std::move(bar));
    }
    return b;
}

json hamiltonian_to_json(const HamiltonianSpec& h) {
    if (h.type == HamiltonianSpec::Type::Radial) {
        json pieces = json::array();
        for (const auto& p : h.profile.pieces()) pieces.push_back(p.c);
        return {{"type", "radial"},
                {"capacity", h.capacity},
                {"alpha", h.profile.alpha()},
                {"profile", {{"breaks", h.profile.breaks()}, {"pieces", pieces}}}};
    }
    return {{"type", "sampled"},
            {"box", {h.grid.x0, h.grid.x1, h.grid.y0, h.grid.y1}},
            {"nx", h.grid.nx},
            {"ny", h.grid.ny},
            {"values", h.grid.values}};
}

HamiltonianSpec hamiltonian_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw std::invalid_argument("json: Hamiltonian must carry a \"type\"");
    std::string type = j["type"].get<std::string>();
    if (type == "radial") {
        const json& pj = j.at("profile");
        std::vector<double> breaks = pj.at("breaks").get<std::vector<double>>();
        std::vector<Poly> pieces;
        for (const auto& c : pj.at("pieces"))
            pieces.push_back(Poly{c.get<std::vector<double>>()});
        RadialProfile prof(breaks, pieces, j.value("alpha", 0.0));
        return HamiltonianSpec::radial_ball(prof, j.at("capacity").get<double>());
    }
    if (type == "sampled") {
        SampledGrid g;
        auto box = j.at("box").get<std::vector<double>>();
        if (box.size() != 4) throw std::invalid_argument("json: box must be [x0,x1,y0,y1]");
        g.x0 = box[0]; g.x1 = box[1]; g.y0 = box[2]; g.y1 = box[3];
        g.nx = j.at("nx").get<int>();
        g.ny = j.at("ny").get<int>();
        g.values = j.at("values").get<std::vector<double>>();
        g.validate();
        return HamiltonianSpec::sampled(std::move(g));
    }
    throw std::invalid_argument("json: unknown Hamiltonian type '" + type + "'");
}

json report_to_json(const InvariantReport& r) {
    return {{"window", {r.window_a, r.window_b}},
            {"dims", dims_to_json(r.dims)},
            {"provenance_mode", r.exact ? "exact" : "bounds"},
            {"stabilized", r.stabilized},
            {"provenance", r.provenance},
            {"notes", r.notes}};
}

json nine_diagram_to_json(const NineDiagramReport& r) {
    static const char* rows[3] = {"small", "full", "positive"};
    static const char* cols[3] = {"sh_complement", "gamma_m", "tamarkin"};
    json entries = json::object();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            entries[std::string(rows[i]) + "." + cols[j]] =
                report_to_json(r.entries[i][j]);
    return {{"consistent", r.consistent},
            {"exact", r.exact},
            {"failures", r.failures},
            {"entries", entries}};
}

} // namespace sbl
