#include "rospave/io.hpp"

#include "rospave/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <utility>

namespace rospave {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

const json& field(const json& j, const char* key) {
    const auto it = j.find(key);
    if (!j.is_object() || it == j.end()) {
        throw ParseError(std::string("missing field \"") + key + "\"");
    }
    return *it;
}

std::size_t as_index(const json& j, const char* what) {
    if (j.is_number_integer() && j.get<long long>() < 0) {
        throw IndexOutOfRange(std::string(what) + " is negative");
    }
    if (!j.is_number_unsigned()) {
        throw ParseError(std::string(what) + " must be a nonnegative integer");
    }
    return j.get<std::size_t>();
}

std::size_t as_dimension(const json& j, const char* what) {
    if (!j.is_number_unsigned()) {
        throw ParseError(std::string(what) + " must be a nonnegative integer");
    }
    return j.get<std::size_t>();
}

Rational as_rational(const json& j, const char* what) {
    if (!j.is_string()) {
        throw ParseError(std::string(what) +
                         " must be a rational string such as \"3/4\", \"0.25\" or \"2\"");
    }
    return parse_rational(j.get<std::string>());
}

std::vector<std::size_t> as_index_list(const json& j, const char* what) {
    if (!j.is_array()) {
        throw ParseError(std::string(what) + " must be an array of indices");
    }
    std::vector<std::size_t> out;
    out.reserve(j.size());
    for (const json& v : j) {
        out.push_back(as_index(v, what));
    }
    return out;
}

NonnegativeMatrix matrix_from_json(const json& doc) {
    const std::size_t n = as_dimension(field(doc, "n"), "\"n\"");
    const json& entries = field(doc, "entries");
    if (!entries.is_array()) {
        throw ParseError("\"entries\" must be an array of [row, col, value] triplets");
    }
    std::vector<NonnegativeMatrix::Entry> triplets;
    triplets.reserve(entries.size());
    for (const json& e : entries) {
        if (!e.is_array() || e.size() != 3) {
            throw ParseError("each entry must be a [row, col, value] triplet");
        }
        NonnegativeMatrix::Entry entry{as_index(e[0], "entry row"), as_index(e[1], "entry col"),
                                       as_rational(e[2], "entry value")};
        if (entry.value < 0) {
            throw NegativeEntry("negative value at (" + std::to_string(entry.row) + ", " +
                                std::to_string(entry.col) + ")");
        }
        triplets.push_back(std::move(entry));
    }
    return NonnegativeMatrix::from_triplets(n, std::move(triplets));
}

NonnegativeMatrix matrix_from_csv(std::string_view text) {
    const auto is_blank = [](std::string_view l) {
        return l.find_first_not_of(" \t") == std::string_view::npos;
    };
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.push_back(line);
        if (eol == text.size()) {
            break;
        }
        pos = eol + 1;
    }
    while (!lines.empty() && is_blank(lines.back())) {
        lines.pop_back();
    }
    std::vector<std::vector<Rational>> rows;
    rows.reserve(lines.size());
    for (std::string_view line : lines) {
        if (is_blank(line)) {
            throw ParseError("blank line inside CSV matrix");
        }
        std::vector<Rational> row;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            const std::string_view cell =
                line.substr(start, comma == std::string_view::npos ? line.size() - start
                                                                   : comma - start);
            row.push_back(parse_rational(cell));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    const std::size_t n = rows.size();
    std::vector<NonnegativeMatrix::Entry> triplets;
    for (std::size_t k = 0; k < n; ++k) {
        if (rows[k].size() != n) {
            throw ParseError("CSV row " + std::to_string(k) + " has " +
                             std::to_string(rows[k].size()) + " values, expected " +
                             std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (rows[k][j] < 0) {
                throw NegativeEntry("negative value at (" + std::to_string(k) + ", " +
                                    std::to_string(j) + ")");
            }
            if (rows[k][j] != 0) {
                triplets.push_back({k, j, std::move(rows[k][j])});
            }
        }
    }
    return NonnegativeMatrix::from_triplets(n, std::move(triplets));
}

json index_set_to_json(const IndexSet& s) {
    json arr = json::array();
    for (std::size_t i : s.members()) {
        arr.push_back(i);
    }
    return arr;
}

json partition_blocks_to_json(const std::vector<IndexSet>& blocks) {
    json arr = json::array();
    for (const IndexSet& b : blocks) {
        arr.push_back(index_set_to_json(b));
    }
    return arr;
}

std::pair<std::size_t, std::vector<IndexSet>> blocks_from_json(const json& doc) {
    const std::size_t n = as_dimension(field(doc, "n"), "\"n\"");
    const json& blocks = field(doc, "blocks");
    if (!blocks.is_array()) {
        throw ParseError("\"blocks\" must be an array of index arrays");
    }
    std::vector<IndexSet> sets;
    sets.reserve(blocks.size());
    for (const json& b : blocks) {
        sets.emplace_back(n, as_index_list(b, "block index"));
    }
    return {n, std::move(sets)};
}

} // namespace

NonnegativeMatrix parse_matrix(std::string_view text) {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        throw ParseError("empty matrix document");
    }
    if (text[first] == '{') {
        return matrix_from_json(parse_json(text));
    }
    return matrix_from_csv(text);
}

std::string serialize_matrix(const NonnegativeMatrix& m) {
    json entries = json::array();
    for (const auto& e : m.all_entries()) {
        entries.push_back(json::array({e.row, e.col, format_rational(e.value)}));
    }
    json doc;
    doc["n"] = m.dim();
    doc["entries"] = std::move(entries);
    return doc.dump(1);
}

IndexPartition parse_partition(std::string_view text) {
    json doc = parse_json(text);
    if (doc.is_object() && doc.contains("partition")) {
        doc = doc["partition"];
    }
    auto [n, sets] = blocks_from_json(doc);
    return IndexPartition(n, std::move(sets));
}

std::string serialize_partition(const IndexPartition& p) {
    json doc;
    doc["n"] = p.ambient_dim();
    doc["blocks"] = partition_blocks_to_json(p.blocks());
    return doc.dump(1);
}

IndexSet parse_index_set(std::string_view text) {
    const json doc = parse_json(text);
    const std::size_t n = as_dimension(field(doc, "n"), "\"n\"");
    return IndexSet(n, as_index_list(field(doc, "set"), "set index"));
}

std::string serialize_index_set(const IndexSet& s) {
    json doc;
    doc["n"] = s.ambient_dim();
    doc["set"] = index_set_to_json(s);
    return doc.dump(1);
}

FixedPointFreeMap parse_map(std::string_view text) {
    const json doc = parse_json(text);
    const std::size_t n = as_dimension(field(doc, "n"), "\"n\"");
    std::vector<std::size_t> values = as_index_list(field(doc, "f"), "map value");
    if (values.size() != n) {
        throw ParseError("\"f\" lists " + std::to_string(values.size()) + " values, \"n\" is " +
                         std::to_string(n));
    }
    std::optional<std::size_t> bound;
    if (doc.contains("finite_to_one_bound")) {
        bound = as_index(doc["finite_to_one_bound"], "\"finite_to_one_bound\"");
    }
    return FixedPointFreeMap(std::move(values), bound);
}

std::string serialize_map(const FixedPointFreeMap& f) {
    json doc;
    doc["n"] = f.dim();
    doc["f"] = json(std::vector<std::size_t>(f.values().begin(), f.values().end()));
    if (f.finite_to_one_bound()) {
        doc["finite_to_one_bound"] = *f.finite_to_one_bound();
    }
    return doc.dump(1);
}

SetFamily parse_family(std::string_view text) {
    const json doc = parse_json(text);
    const std::size_t n = as_dimension(field(doc, "n"), "\"n\"");
    const json& sets = field(doc, "sets");
    if (!sets.is_array()) {
        throw ParseError("\"sets\" must be an array of index arrays");
    }
    std::vector<IndexSet> members;
    members.reserve(sets.size());
    for (const json& s : sets) {
        members.emplace_back(n, as_index_list(s, "family index"));
    }
    return SetFamily(n, std::move(members));
}

std::string serialize_family(const SetFamily& f) {
    json doc;
    doc["n"] = f.ambient_dim();
    json sets = json::array();
    for (const IndexSet& s : f.sets()) {
        sets.push_back(index_set_to_json(s));
    }
    doc["sets"] = std::move(sets);
    return doc.dump(1);
}

IntervalPartition parse_intervals(std::string_view text) {
    const json doc = parse_json(text);
    return IntervalPartition(as_index_list(field(doc, "endpoints"), "endpoint"));
}

std::string serialize_intervals(const IntervalPartition& p) {
    json doc;
    doc["endpoints"] =
        json(std::vector<std::size_t>(p.endpoints().begin(), p.endpoints().end()));
    return doc.dump(1);
}

std::pair<std::size_t, std::vector<IndexSet>> parse_block_list(std::string_view text) {
    json doc = parse_json(text);
    if (doc.is_object() && doc.contains("blocks") && doc.contains("n")) {
        return blocks_from_json(doc);
    }
    throw ParseError("block list document must carry \"n\" and \"blocks\"");
}

std::string serialize_block_list(std::size_t ambient, const std::vector<IndexSet>& blocks) {
    json doc;
    doc["n"] = ambient;
    doc["blocks"] = partition_blocks_to_json(blocks);
    return doc.dump(1);
}

std::string serialize_certificate(const FragmentationCertificate& c) {
    json doc;
    doc["epsilon"] = format_rational(c.epsilon);
    doc["set"] = index_set_to_json(c.set);
    json residuals = json::array();
    for (const auto& [k, r] : c.residuals) {
        residuals.push_back(json::array({k, format_rational(r)}));
    }
    doc["residuals"] = std::move(residuals);
    if (c.violated_at) {
        doc["verdict"] = json{{"violated_at", *c.violated_at}};
    } else {
        doc["verdict"] = "fragmented";
    }
    return doc.dump(1);
}

} // namespace rospave
