#include "omcube/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "omcube/error.hpp"

namespace omcube::io {

namespace {

[[noreturn]] void parse_fail(std::size_t line, std::size_t column, const std::string& what) {
    fail(ErrorCode::parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

// Line/column of a byte offset (both 1-based).
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = locate(text, e.byte > 0 ? e.byte - 1 : 0);
        parse_fail(line, col, "malformed JSON");
    }
}

BitOrder bit_order_of(const Json& j) {
    if (!j.contains("bit_order")) return BitOrder::msb_element_1;
    const auto& v = j.at("bit_order");
    if (v == "msb_element_1") return BitOrder::msb_element_1;
    if (v == "msb_element_m") return BitOrder::msb_element_m;
    fail(ErrorCode::parse, "bit_order must be \"msb_element_1\" or \"msb_element_m\"");
}

}  // namespace

std::string bitstring(Mask v, int m, BitOrder order) {
    std::string s(static_cast<std::size_t>(m), '0');
    for (int e = 0; e < m; ++e)
        if (v & bit(e)) s[order == BitOrder::msb_element_1 ? e : m - 1 - e] = '1';
    return s;
}

Mask parse_bitstring(std::string_view s, int m, BitOrder order) {
    if (static_cast<int>(s.size()) != m)
        fail(ErrorCode::parse, "bitstring \"" + std::string(s) + "\" does not have length " + std::to_string(m));
    Mask v = 0;
    for (int i = 0; i < m; ++i) {
        const char c = s[static_cast<std::size_t>(i)];
        if (c != '0' && c != '1') fail(ErrorCode::parse, "bitstring \"" + std::string(s) + "\" has a character other than 0/1");
        if (c == '1') v |= bit(order == BitOrder::msb_element_1 ? i : m - 1 - i);
    }
    return v;
}

Json family_to_json(const Family& f) {
    Json j;
    j["m"] = f.m();
    j["bit_order"] = "msb_element_1";
    Json vs = Json::array();
    for (Mask v : f) vs.push_back(bitstring(v, f.m()));
    j["vertices"] = std::move(vs);
    return j;
}

Family family_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("vertices"))
        fail(ErrorCode::parse, "family JSON needs \"m\" and \"vertices\"");
    if (!j.at("m").is_number_integer()) fail(ErrorCode::parse, "\"m\" must be an integer");
    const int m = j.at("m").get<int>();
    if (m < 0 || m > max_ground) fail(ErrorCode::dimension, "m must lie in 0..32");
    const BitOrder order = bit_order_of(j);
    std::vector<Mask> vs;
    for (const auto& v : j.at("vertices")) {
        if (v.is_string()) {
            vs.push_back(parse_bitstring(v.get<std::string>(), m, order));
        } else if (v.is_number_unsigned() || v.is_number_integer()) {
            const auto x = v.get<long long>();
            if (x < 0 || (m < 32 && x >= (1LL << m))) fail(ErrorCode::parse, "decimal vertex out of range for m");
            vs.push_back(static_cast<Mask>(x));
        } else {
            fail(ErrorCode::parse, "vertices must be bitstrings or decimal masks");
        }
    }
    return {m, std::move(vs)};
}

Family parse_family(std::string_view text) { return family_from_json(parse_json(text)); }

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::argument, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::argument, "cannot write " + path);
    out << text;
}

}  // namespace

Family load_family(const std::string& path) { return parse_family(read_text(path)); }

void save_family(const std::string& path, const Family& f) { write_text(path, family_to_json(f).dump(2) + "\n"); }

SignSystem parse_signsystem(std::string_view text) {
    std::vector<SignVector> xs;
    int m = -1;
    std::size_t line_no = 0, start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::size_t lead = 0;
        while (lead < line.size() && (line[lead] == ' ' || line[lead] == '\t' || line[lead] == '\r')) ++lead;
        std::size_t tail = line.size();
        while (tail > lead && (line[tail - 1] == ' ' || line[tail - 1] == '\t' || line[tail - 1] == '\r')) --tail;
        const std::string_view body = line.substr(lead, tail - lead);
        if (!body.empty()) {
            for (std::size_t i = 0; i < body.size(); ++i)
                if (body[i] != '+' && body[i] != '-' && body[i] != '0')
                    parse_fail(line_no, lead + i + 1, "expected one of + - 0");
            if (m < 0) m = static_cast<int>(body.size());
            if (static_cast<int>(body.size()) != m)
                parse_fail(line_no, lead + 1, "covector length " + std::to_string(body.size()) + " differs from " + std::to_string(m));
            if (m > max_ground) parse_fail(line_no, lead + 1, "more than 32 elements");
            xs.push_back(SignVector::parse(body));
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    if (m < 0) fail(ErrorCode::parse, "sign system has no covectors");
    return {m, std::move(xs)};
}

std::string format_signsystem(const SignSystem& sys) {
    std::string out;
    for (const auto& x : sys.covectors()) out += x.to_string() + "\n";
    return out;
}

SignSystem load_signsystem(const std::string& path) { return parse_signsystem(read_text(path)); }

Json arrangement_to_json(const Arrangement& arr) {
    Json j;
    j["r"] = arr.r;
    j["vectors"] = arr.vectors;
    Json region = Json::array();
    for (const auto& h : arr.region) {
        Json row = Json::array();
        for (auto x : h.normal) row.push_back(x);
        row.push_back(">");
        row.push_back(h.offset);
        region.push_back(std::move(row));
    }
    j["region"] = std::move(region);
    return j;
}

Arrangement arrangement_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("r") || !j.contains("vectors"))
        fail(ErrorCode::parse, "arrangement JSON needs \"r\" and \"vectors\"");
    Arrangement arr;
    try {
        arr.r = j.at("r").get<int>();
        arr.vectors = j.at("vectors").get<std::vector<std::vector<std::int64_t>>>();
        if (j.contains("region"))
            for (const auto& row : j.at("region")) {
                if (!row.is_array() || static_cast<int>(row.size()) != arr.r + 2)
                    fail(ErrorCode::parse, "region rows are [a_1..a_r, \">\" or \"<\", b]");
                Arrangement::Halfspace h;
                for (int i = 0; i < arr.r; ++i) h.normal.push_back(row.at(static_cast<std::size_t>(i)).get<std::int64_t>());
                const std::string op = row.at(static_cast<std::size_t>(arr.r)).get<std::string>();
                h.offset = row.at(static_cast<std::size_t>(arr.r) + 1).get<std::int64_t>();
                if (op == "<") {
                    for (auto& x : h.normal) x = -x;
                    h.offset = -h.offset;
                } else if (op != ">") {
                    fail(ErrorCode::parse, "region relation must be \">\" or \"<\"");
                }
                arr.region.push_back(std::move(h));
            }
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::parse, std::string("arrangement JSON: ") + e.what());
    }
    arr.validate();
    return arr;
}

Arrangement parse_arrangement(std::string_view text) { return arrangement_from_json(parse_json(text)); }

Json report_to_json(const ClassReport& r) {
    Json j;
    j["simple"] = r.simple;
    j["partial_cube"] = r.partial_cube;
    j["COM"] = r.com;
    j["OM"] = r.om;
    j["UOM"] = r.uom;
    j["CUOM"] = r.cuom;
    j["AMP"] = r.amp;
    j["vcd"] = r.vcd;
    if (r.rank >= 0) j["rank"] = r.rank;
    else j["rank"] = nullptr;
    j["reasons"] = r.reasons;
    return j;
}

Json face_to_json(const Face& f) {
    Json j;
    j["covector"] = f.covector.to_string();
    Json ts = Json::array();
    for (Mask v : f.topes) ts.push_back(bitstring(v, f.topes.m()));
    j["topes"] = std::move(ts);
    j["cube"] = f.is_cube();
    j["uom"] = classify(f.topes).uom;
    j["gated"] = f.gated;
    return j;
}

Json trace_to_json(const CompletionTrace& t) {
    Json j;
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        Json step;
        step["op"] = s.op;
        step["target"] = s.target;
        step["before"] = s.before;
        step["after"] = s.after;
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    j["result"] = family_to_json(t.result);
    Json checks = Json::array();
    for (const auto& [name, ok] : t.assertions) {
        Json c;
        c["check"] = name;
        c["passed"] = ok;
        checks.push_back(std::move(c));
    }
    j["assertions"] = std::move(checks);
    return j;
}

void save_trace(const std::string& path, const CompletionTrace& t) { write_text(path, trace_to_json(t).dump(2) + "\n"); }

std::string export_dot(const Family& f) {
    std::string out = "graph G {\n";
    for (Mask v : f) out += "  \"" + bitstring(v, f.m()) + "\";\n";
    for (Mask v : f)
        for (int e = 0; e < f.m(); ++e) {
            const Mask w = v | bit(e);
            if (w == v || !f.contains(w)) continue;
            out += "  \"" + bitstring(v, f.m()) + "\" -- \"" + bitstring(w, f.m()) + "\" [label=\"" + std::to_string(e + 1) + "\"];\n";
        }
    out += "}\n";
    return out;
}

std::string digest(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace omcube::io
