#ifndef PINLAB_OEIS_HPP
#define PINLAB_OEIS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pinlab/bigcount.hpp"

namespace pinlab {
namespace oeis {

/// One parsed b-file: "index value" lines with strictly increasing indices.
struct BFileSequence {
    std::string id; // "A" followed by six digits
    struct Point {
        long long index;
        BigCount value;
    };
    std::vector<Point> points;
};

bool valid_id(const std::string& id);

/// Parses b-file text. '#' comment lines and blank lines are skipped.
/// Throws std::invalid_argument with the offending line number on malformed
/// lines, non-integer values, or non-increasing indices.
BFileSequence parse_bfile(const std::string& text, const std::string& id = "");

/// Inverse of parse_bfile on well-formed files (comments excluded).
std::string render_bfile(const BFileSequence& seq);

/// How a registered computed sequence lines up with a b-file: which library
/// quantity is evaluated at each b-file index, and how the published value
/// is transformed before comparing (identity for most sequences, doubling
/// where the literature lists half of our terms).
struct SequenceMapping {
    std::string id;
    std::string producer;    // name of the library quantity
    std::string description; // index transform in words
    std::function<std::optional<BigCount>(long long)> value_at;
    std::function<BigCount(const BigCount&)> file_transform; // may be null
};

/// The eight cited sequences, keyed by id.
const std::vector<SequenceMapping>& registered_mappings();
const SequenceMapping* find_mapping(const std::string& id);

/// Outcome of one sequence comparison over the overlap of defined indices.
struct ComparisonReport {
    std::string id;
    std::string mapping_description;
    std::string provenance;    // file path, cache hit, or network URL
    long long compared = 0;    // points actually checked
    long long skipped = 0;     // file points outside the producer's domain
    bool all_match = false;
    long long first_mismatch_index = -1;
    std::string mismatch_file_value;     // transformed file value
    std::string mismatch_computed_value;

    std::string render_text() const;
};

/// Compares a parsed b-file against a registered mapping. Throws
/// std::domain_error when no point of the file lies in the producer's
/// domain (empty overlap).
ComparisonReport compare(const BFileSequence& seq, const SequenceMapping& mapping,
                         std::string provenance = "");

struct FetchOptions {
    bool allow_network = false;
    std::string cache_dir; // empty: $PINLAB_OEIS_CACHE or ./.oeis-cache
};

/// Default cache directory resolution.
std::string default_cache_dir();

/// Returns the sequence for `id`, reading the per-id cache file first. On a
/// cold cache with networking enabled, performs the HTTP GET for the
/// standard b-file resource and caches the body only after it parses.
/// Throws on malformed ids, on a cold cache with networking disabled
/// ("offline, no fixture"), and on HTTP or parse failures. When
/// `provenance` is non-null it receives "cache:PATH" or "network:URL".
BFileSequence fetch(const std::string& id, const FetchOptions& options = {},
                    std::string* provenance = nullptr);

} // namespace oeis
} // namespace pinlab

#endif
