#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulergen/exactmath.hpp"
#include "eulergen/report.hpp"
#include "eulergen/triangles.hpp"

namespace eulergen::oeis {

using exactmath::Int;

struct SequenceEntry {
    long long index = 0;
    Int value;
    friend bool operator==(const SequenceEntry&, const SequenceEntry&) = default;
};

/// A parsed b-file: exact integer entries with strictly increasing indices.
struct SequenceRecord {
    std::string id;  // "A" + 6 digits
    std::vector<SequenceEntry> entries;
    friend bool operator==(const SequenceRecord&, const SequenceRecord&) = default;
};

class BFileParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FixtureMissingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NetworkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool valid_id(const std::string& id);

/// Parses b-file text: one "index value" pair per line, '#' comments and
/// blank lines skipped.  Errors name the offending line number.
SequenceRecord parse_bfile(std::istream& in, const std::string& id);

/// Inverse of parse_bfile modulo comments and surplus whitespace.
std::string serialize_bfile(const SequenceRecord& record);

enum class FetchMode { fixture, network };

struct OeisConfig {
    std::filesystem::path fixture_dir;
    std::filesystem::path cache_dir;
    int timeout_seconds = 10;
};

/// Fixture dir from EULERGEN_FIXTURES (default "data/oeis"), cache dir from
/// EULERGEN_CACHE_DIR (default ~/.cache/eulergen).
OeisConfig default_config();

/// Fixture mode reads only fixture_dir/b<digits>.txt (no network client is
/// ever constructed).  Network mode serves from the on-disk cache when
/// possible, otherwise downloads https://oeis.org/A<digits>/b<digits>.txt
/// and caches it atomically.
SequenceRecord fetch_sequence(const std::string& id, FetchMode mode, const OeisConfig& config);

/// How triangle entries map onto the flat b-file: rows start_row, start_row+1,
/// ... are read left to right; column_shift only relabels k in mismatch
/// messages (OEIS A008292 indexes columns from 1).
struct ReadOrder {
    long start_row = 1;
    long column_shift = 0;
};

/// Largest number of complete triangle rows the record covers.
long complete_rows(const SequenceRecord& record, const ReadOrder& order);

/// Entry-by-entry comparison of the first `rows` triangle rows against the
/// sequence.  All compared triangle entries must be integers.
CheckReport compare_triangle(const triangles::Triangle& t, const SequenceRecord& s,
                             const ReadOrder& order, long rows);

/// Same comparison for |M(n,k)| against the sequence.
CheckReport compare_m_triangle_abs(const triangles::MTriangle& t, const SequenceRecord& s,
                                   const ReadOrder& order, long rows);

/// Human-inspection dump: odd rows of the (1/2, 1) triangle next to the raw
/// A160468 entries.  No automatic verdict is attached (the row mapping is
/// not pinned down).  Throws FixtureMissingError when the record is empty.
std::string probe_a160468(long n_max, const SequenceRecord& record);

}  // namespace eulergen::oeis
