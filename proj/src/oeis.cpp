#include "pinlab/oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifdef PINLAB_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include "pinlab/conjecture.hpp"
#include "pinlab/enumeration.hpp"

namespace pinlab {
namespace oeis {

bool valid_id(const std::string& id) {
    if (id.size() != 7 || id[0] != 'A')
        return false;
    for (std::size_t i = 1; i < id.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i])))
            return false;
    return true;
}

namespace {

BigCount parse_bigint(const std::string& tok, int line_no) {
    std::size_t i = 0;
    if (i < tok.size() && (tok[i] == '+' || tok[i] == '-'))
        ++i;
    if (i == tok.size())
        throw std::invalid_argument("b-file line " + std::to_string(line_no) +
                                    ": '" + tok + "' is not an integer");
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            throw std::invalid_argument("b-file line " + std::to_string(line_no) +
                                        ": '" + tok + "' is not an integer");
    return BigCount(tok);
}

} // namespace

BFileSequence parse_bfile(const std::string& text, const std::string& id) {
    BFileSequence seq;
    seq.id = id;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream ls(line);
        std::string idx_tok, val_tok, extra;
        if (!(ls >> idx_tok >> val_tok))
            throw std::invalid_argument("b-file line " + std::to_string(line_no) +
                                        ": expected 'index value', got '" + line +
                                        "'");
        if (ls >> extra)
            throw std::invalid_argument("b-file line " + std::to_string(line_no) +
                                        ": trailing content '" + extra + "'");
        long long index = 0;
        try {
            std::size_t pos = 0;
            index = std::stoll(idx_tok, &pos);
            if (pos != idx_tok.size())
                throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("b-file line " + std::to_string(line_no) +
                                        ": index '" + idx_tok +
                                        "' is not an integer");
        }
        if (!seq.points.empty() && index <= seq.points.back().index)
            throw std::invalid_argument("b-file line " + std::to_string(line_no) +
                                        ": index " + std::to_string(index) +
                                        " does not increase");
        seq.points.push_back({index, parse_bigint(val_tok, line_no)});
    }
    return seq;
}

std::string render_bfile(const BFileSequence& seq) {
    std::string out;
    for (const auto& p : seq.points) {
        out += std::to_string(p.index);
        out += ' ';
        out += p.value.str();
        out += '\n';
    }
    return out;
}

namespace {

std::vector<SequenceMapping> build_mappings() {
    std::vector<SequenceMapping> maps;

    maps.push_back({"A359066", "count_B", "b-file index n is the rank, n >= 2",
                    [](long long i) -> std::optional<BigCount> {
                        if (i < 2 || i > 1000)
                            return std::nullopt;
                        return count_B(static_cast<int>(i));
                    },
                    nullptr});

    maps.push_back({"A359067", "count_D", "b-file index n is the rank, n >= 2",
                    [](long long i) -> std::optional<BigCount> {
                        if (i < 2 || i > 1000)
                            return std::nullopt;
                        return count_D(static_cast<int>(i));
                    },
                    nullptr});

    maps.push_back({"A240721", "count_B", "b-file index k is half the rank: n = 2k",
                    [](long long i) -> std::optional<BigCount> {
                        if (i < 1 || i > 500)
                            return std::nullopt;
                        return count_B(static_cast<int>(2 * i));
                    },
                    nullptr});

    maps.push_back({"A178792", "count_B", "b-file index k gives odd rank n = 2k+1",
                    [](long long i) -> std::optional<BigCount> {
                        if (i < 1 || i > 500)
                            return std::nullopt;
                        return count_B(static_cast<int>(2 * i + 1));
                    },
                    nullptr});

    maps.push_back({"A294175", "count_plus_minus_A",
                    "count_plus_minus_A(n) is double the (n-1)st term: index "
                    "m gives n = m+1",
                    [](long long i) -> std::optional<BigCount> {
                        if (i < 1 || i > 1000)
                            return std::nullopt;
                        return count_plus_minus_A(static_cast<int>(i + 1));
                    },
                    [](const BigCount& v) { return v * 2; }});

    maps.push_back({"A068551", "count_plus_minus_A",
                    "odd ranks: b-file index k gives n = 2k+1",
                    [](long long i) -> std::optional<BigCount> {
                        if (i < 1 || i > 500)
                            return std::nullopt;
                        return count_plus_minus_A(static_cast<int>(2 * i + 1));
                    },
                    nullptr});

    maps.push_back({"A008549", "count_plus_minus_A",
                    "even ranks at doubled terms: b-file index j gives n = "
                    "2j+2, term doubled",
                    [](long long i) -> std::optional<BigCount> {
                        if (i < 0 || i > 500)
                            return std::nullopt;
                        return count_plus_minus_A(static_cast<int>(2 * i + 2));
                    },
                    [](const BigCount& v) { return v * 2; }});

    maps.push_back({"A119258", "triangle_T",
                    "triangle read by rows: linear index n(n+1)/2 + k",
                    [](long long i) -> std::optional<BigCount> {
                        if (i < 0 || i > 20000)
                            return std::nullopt;
                        long long n = 0;
                        while ((n + 1) * (n + 2) / 2 <= i)
                            ++n;
                        const long long k = i - n * (n + 1) / 2;
                        return triangle_T(static_cast<int>(n),
                                          static_cast<int>(k));
                    },
                    nullptr});

    return maps;
}

} // namespace

const std::vector<SequenceMapping>& registered_mappings() {
    static const std::vector<SequenceMapping> maps = build_mappings();
    return maps;
}

const SequenceMapping* find_mapping(const std::string& id) {
    for (const auto& m : registered_mappings())
        if (m.id == id)
            return &m;
    return nullptr;
}

ComparisonReport compare(const BFileSequence& seq, const SequenceMapping& mapping,
                         std::string provenance) {
    ComparisonReport report;
    report.id = seq.id.empty() ? mapping.id : seq.id;
    report.mapping_description = mapping.description;
    report.provenance = std::move(provenance);
    report.all_match = true;

    for (const auto& point : seq.points) {
        const auto computed = mapping.value_at(point.index);
        if (!computed) {
            ++report.skipped;
            continue;
        }
        const BigCount file_value =
            mapping.file_transform ? mapping.file_transform(point.value)
                                   : point.value;
        ++report.compared;
        if (file_value != *computed && report.all_match) {
            report.all_match = false;
            report.first_mismatch_index = point.index;
            report.mismatch_file_value = file_value.str();
            report.mismatch_computed_value = computed->str();
        }
    }
    if (report.compared == 0)
        throw std::domain_error("compare: no overlap between " + report.id +
                                " points and the domain of " + mapping.producer);
    return report;
}

std::string ComparisonReport::render_text() const {
    std::string out = id + " vs " + mapping_description;
    if (!provenance.empty())
        out += " [" + provenance + "]";
    out += ": " + std::to_string(compared) + " points";
    if (skipped > 0)
        out += " (" + std::to_string(skipped) + " outside domain)";
    if (all_match) {
        out += " all match";
    } else {
        out += " FIRST MISMATCH at index " + std::to_string(first_mismatch_index) +
               ": file " + mismatch_file_value + " vs computed " +
               mismatch_computed_value;
    }
    out += '\n';
    return out;
}

std::string default_cache_dir() {
    if (const char* env = std::getenv("PINLAB_OEIS_CACHE"); env && *env)
        return env;
    return ".oeis-cache";
}

BFileSequence fetch(const std::string& id, const FetchOptions& options,
                    std::string* provenance) {
    if (!valid_id(id))
        throw std::invalid_argument("fetch: malformed OEIS id '" + id +
                                    "' (expected A followed by six digits)");
    const std::string cache_dir =
        options.cache_dir.empty() ? default_cache_dir() : options.cache_dir;
    const std::filesystem::path cache_path =
        std::filesystem::path(cache_dir) / (id + ".txt");

    if (std::filesystem::exists(cache_path)) {
        std::ifstream in(cache_path);
        std::stringstream buf;
        buf << in.rdbuf();
        BFileSequence seq = parse_bfile(buf.str(), id);
        if (provenance)
            *provenance = "cache:" + cache_path.string();
        return seq;
    }

    if (!options.allow_network)
        throw std::runtime_error("fetch: offline, no fixture for " + id +
                                 " (cache miss at " + cache_path.string() +
                                 " and networking not enabled)");

    const std::string path = "/" + id + "/b" + id.substr(1) + ".txt";
#ifdef PINLAB_HAVE_OPENSSL
    httplib::Client client("https://oeis.org");
#else
    httplib::Client client("http://oeis.org");
#endif
    client.set_follow_location(true);
    auto res = client.Get(path);
    if (!res)
        throw std::runtime_error("fetch: request for " + id + " failed: " +
                                 httplib::to_string(res.error()));
    if (res->status != 200)
        throw std::runtime_error("fetch: request for " + id + " returned HTTP " +
                                 std::to_string(res->status));

    BFileSequence seq = parse_bfile(res->body, id); // throws before caching
    std::filesystem::create_directories(cache_dir);
    std::ofstream out(cache_path);
    out << res->body;
    if (provenance)
        *provenance = "network:oeis.org" + path;
    return seq;
}

} // namespace oeis
} // namespace pinlab
