#include "fc/format.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fc {

namespace {

using nlohmann::ordered_json;

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError("expected '" + std::string(1, c) + "' at position " +
                             std::to_string(pos) + " in family text");
        ++pos;
    }
    int number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw ParseError("expected a number at position " + std::to_string(pos));
        long v = std::stol(text.substr(start, pos - start));
        if (v >= SetWord::max_universe) throw ParseError("element out of range: " + std::to_string(v));
        return static_cast<int>(v);
    }
    std::vector<int> set_literal() {
        expect('{');
        std::vector<int> elems;
        if (!peek('}')) {
            elems.push_back(number());
            while (peek(',')) {
                expect(',');
                elems.push_back(number());
            }
        }
        expect('}');
        return elems;
    }
};

}  // namespace

Family parse_family(const std::string& text, std::optional<int> universe_size) {
    Parser p{text};
    p.expect('{');
    std::vector<std::vector<int>> sets;
    if (!p.peek('}')) {
        // Distinguish the empty family "{}" from a leading set literal.
        sets.push_back(p.set_literal());
        while (p.peek(',')) {
            p.expect(',');
            sets.push_back(p.set_literal());
        }
    }
    p.expect('}');
    p.skip_ws();
    if (p.pos != text.size())
        throw ParseError("trailing input after family at position " + std::to_string(p.pos));

    int max_elem = -1;
    for (const auto& s : sets)
        for (int e : s) max_elem = std::max(max_elem, e);
    int n = universe_size.value_or(max_elem + 1);
    if (n < max_elem + 1)
        throw ParseError("universe size " + std::to_string(n) + " too small for element " +
                         std::to_string(max_elem));
    if (n > 16) throw ParseError("universe size " + std::to_string(n) + " exceeds 16");

    std::vector<SetWord> members;
    members.reserve(sets.size());
    for (const auto& s : sets) members.push_back(SetWord::from_elements(s, n));
    return Family(std::move(members), n);
}

std::string print_set(const SetWord& a) {
    std::string out = "{";
    bool first = true;
    for (int e : a.elements()) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

std::string print_family(const Family& f) {
    std::string out = "{";
    bool first = true;
    for (const SetWord& a : f) {
        if (!first) out += ",";
        out += print_set(a);
        first = false;
    }
    return out + "}";
}

namespace {

ordered_json family_to_json(const Family& f) {
    ordered_json arr = ordered_json::array();
    for (const SetWord& a : f) {
        ordered_json set = ordered_json::array();
        for (int e : a.elements()) set.push_back(e);
        arr.push_back(std::move(set));
    }
    return arr;
}

Family family_from_json(const ordered_json& arr, int n) {
    if (!arr.is_array()) throw ParseError("family JSON must be an array of arrays");
    std::vector<SetWord> members;
    for (const auto& set : arr) {
        if (!set.is_array()) throw ParseError("set JSON must be an array of naturals");
        std::vector<int> elems;
        for (const auto& e : set) elems.push_back(e.get<int>());
        members.push_back(SetWord::from_elements(elems, n));
    }
    return Family(std::move(members), n);
}

ordered_json fc_certificate_to_json(const FCCertificate& cert) {
    ordered_json j;
    j["family"] = family_to_json(cert.family);
    j["universe"] = cert.family.universe_size();
    j["status"] = "FC";
    j["weight"] = cert.weight.weights();
    return j;
}

ordered_json nonfc_certificate_to_json(const NonFCCertificate& cert) {
    ordered_json j;
    j["family"] = family_to_json(cert.family);
    j["universe"] = cert.family.universe_size();
    j["status"] = "nonFC";
    ordered_json witnesses = ordered_json::array();
    for (const auto& [fi, ci] : cert.witnesses) {
        ordered_json w;
        w["family"] = family_to_json(fi);
        w["coefficient"] = ci;
        witnesses.push_back(std::move(w));
    }
    j["witnesses"] = std::move(witnesses);
    return j;
}

FCStatus certificate_from_json_value(const ordered_json& j) {
    if (!j.contains("family") || !j.contains("universe") || !j.contains("status"))
        throw ParseError("certificate missing family/universe/status");
    int n = j.at("universe").get<int>();
    if (n < 0 || n > SetWord::max_universe) throw ParseError("certificate universe out of range");
    Family fam = family_from_json(j.at("family"), n);
    std::string status = j.at("status").get<std::string>();
    if (status == "FC") {
        if (!j.contains("weight") || j.contains("witnesses"))
            throw ParseError("FC certificate must carry weight and no witnesses");
        auto weights = j.at("weight").get<std::vector<std::uint64_t>>();
        if (static_cast<int>(weights.size()) != n)
            throw ParseError("weight vector length must equal the universe size");
        return FCStatus::make_fc(FCCertificate{std::move(fam), WeightFn(std::move(weights))});
    }
    if (status == "nonFC") {
        if (!j.contains("witnesses") || j.contains("weight"))
            throw ParseError("nonFC certificate must carry witnesses and no weight");
        NonFCCertificate cert{std::move(fam), {}};
        for (const auto& w : j.at("witnesses")) {
            cert.witnesses.emplace_back(family_from_json(w.at("family"), n),
                                        w.at("coefficient").get<std::uint64_t>());
        }
        return FCStatus::make_nonfc(std::move(cert));
    }
    throw ParseError("certificate status must be \"FC\" or \"nonFC\"");
}

}  // namespace

std::string certificate_to_json(const FCStatus& status) {
    ordered_json j = status.is_fc() ? fc_certificate_to_json(status.fc_certificate())
                                    : nonfc_certificate_to_json(status.nonfc_certificate());
    return j.dump(2) + "\n";
}

FCStatus certificate_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("certificate JSON: ") + e.what());
    }
    try {
        return certificate_from_json_value(j);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("certificate JSON: ") + e.what());
    }
}

std::string stats_to_csv(const std::vector<StatsRow>& rows) {
    std::ostringstream out;
    out << "L,count_fc,count_nonfc,count_fc_irred,count_nonfc_irred,count_min_fc,count_max_nonfc\n";
    for (const StatsRow& row : rows) {
        out << "\"[";
        for (std::size_t i = 0; i < row.partition.size(); ++i) {
            if (i) out << " ";
            out << row.partition[i];
        }
        out << "]\"," << row.count_fc << "," << row.count_nonfc << "," << row.count_fc_irred
            << "," << row.count_nonfc_irred << "," << row.count_min_fc << ","
            << row.count_max_nonfc << "\n";
    }
    return out.str();
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ordered_json lists_to_json(const std::vector<PartitionList>& lists) {
    ordered_json arr = ordered_json::array();
    for (const PartitionList& l : lists) arr.push_back(l);
    return arr;
}

std::vector<PartitionList> lists_from_json(const ordered_json& arr) {
    std::vector<PartitionList> out;
    for (const auto& l : arr) out.push_back(l.get<PartitionList>());
    return out;
}

}  // namespace

void save_characterization(const Characterization& chars, const std::string& dir,
                           const std::vector<StatsRow>* stats_rows, double wall_clock_seconds) {
    std::filesystem::create_directories(dir);
    std::filesystem::path base(dir);

    ordered_json families;
    families["n"] = chars.n;
    families["minimal_fc"] = ordered_json::array();
    for (const FCCertificate& c : chars.minimal_fc)
        families["minimal_fc"].push_back(fc_certificate_to_json(c));
    families["maximal_nonfc"] = ordered_json::array();
    for (const NonFCCertificate& c : chars.maximal_nonfc)
        families["maximal_nonfc"].push_back(nonfc_certificate_to_json(c));
    write_file(base / "families.json", families.dump(2) + "\n");

    ordered_json lists;
    lists["lf"] = lists_to_json(chars.lf_lists);
    lists["ln"] = lists_to_json(chars.ln_lists);
    write_file(base / "lf_ln.json", lists.dump(2) + "\n");

    if (stats_rows) write_file(base / "stats.csv", stats_to_csv(*stats_rows));

    ordered_json manifest;
    manifest["n"] = chars.n;
    manifest["tool"] = "fcfam";
    manifest["version"] = "1.0.0";
    manifest["minimal_fc_count"] = chars.minimal_fc.size();
    manifest["maximal_nonfc_count"] = chars.maximal_nonfc.size();
    manifest["fc_examined"] = chars.fc_examined;
    manifest["nonfc_examined"] = chars.nonfc_examined;
    manifest["wall_clock_seconds"] = wall_clock_seconds;
    write_file(base / "manifest.json", manifest.dump(2) + "\n");
}

Characterization load_characterization(const std::string& dir) {
    std::filesystem::path base(dir);
    ordered_json families = ordered_json::parse(read_file(base / "families.json"));
    Characterization chars;
    chars.n = families.at("n").get<int>();
    for (const auto& j : families.at("minimal_fc")) {
        FCStatus status = certificate_from_json_value(j);
        if (!status.is_fc()) throw ParseError("minimal_fc entry is not an FC certificate");
        chars.minimal_fc.push_back(status.fc_certificate());
    }
    for (const auto& j : families.at("maximal_nonfc")) {
        FCStatus status = certificate_from_json_value(j);
        if (status.is_fc()) throw ParseError("maximal_nonfc entry is not a nonFC certificate");
        chars.maximal_nonfc.push_back(status.nonfc_certificate());
    }
    ordered_json lists = ordered_json::parse(read_file(base / "lf_ln.json"));
    chars.lf_lists = lists_from_json(lists.at("lf"));
    chars.ln_lists = lists_from_json(lists.at("ln"));
    ordered_json manifest = ordered_json::parse(read_file(base / "manifest.json"));
    chars.fc_examined = manifest.value("fc_examined", std::uint64_t{0});
    chars.nonfc_examined = manifest.value("nonfc_examined", std::uint64_t{0});
    return chars;
}

}  // namespace fc
