#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "eulergen/oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

namespace eulergen::oeis {

bool valid_id(const std::string& id) {
    if (id.size() != 7 || id[0] != 'A') return false;
    for (std::size_t i = 1; i < id.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
    return true;
}

namespace {

[[noreturn]] void parse_error(const std::string& id, std::size_t line_no,
                              const std::string& what) {
    throw BFileParseError("b-file for " + id + ", line " + std::to_string(line_no) + ": " +
                          what);
}

bool integer_token(const std::string& tok) {
    std::size_t i = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    return true;
}

std::string require_valid_id(const std::string& id) {
    if (!valid_id(id))
        throw std::invalid_argument("not an OEIS id (expected A followed by 6 digits): " + id);
    return id.substr(1);
}

}  // namespace

SequenceRecord parse_bfile(std::istream& in, const std::string& id) {
    SequenceRecord record;
    record.id = id;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string index_tok, value_tok, extra;
        if (!(ls >> index_tok) || index_tok[0] == '#') continue;
        if (!(ls >> value_tok)) parse_error(id, line_no, "missing value column");
        if (ls >> extra) parse_error(id, line_no, "unexpected trailing token '" + extra + "'");
        if (!integer_token(index_tok) || !integer_token(value_tok))
            parse_error(id, line_no, "expected 'index value', got '" + line + "'");
        SequenceEntry entry;
        entry.index = std::stoll(index_tok);
        entry.value = Int(value_tok);
        if (!record.entries.empty() && entry.index <= record.entries.back().index)
            parse_error(id, line_no, "indices not strictly increasing");
        record.entries.push_back(std::move(entry));
    }
    return record;
}

std::string serialize_bfile(const SequenceRecord& record) {
    std::ostringstream os;
    for (const auto& e : record.entries)
        os << e.index << ' ' << e.value.get_str() << '\n';
    return os.str();
}

OeisConfig default_config() {
    OeisConfig config;
    if (const char* fixtures = std::getenv("EULERGEN_FIXTURES"))
        config.fixture_dir = fixtures;
    else
        config.fixture_dir = "data/oeis";
    if (const char* cache = std::getenv("EULERGEN_CACHE_DIR")) {
        config.cache_dir = cache;
    } else if (const char* home = std::getenv("HOME")) {
        config.cache_dir = std::filesystem::path(home) / ".cache" / "eulergen";
    } else {
        config.cache_dir = std::filesystem::temp_directory_path() / "eulergen-cache";
    }
    return config;
}

namespace {

SequenceRecord parse_file(const std::filesystem::path& path, const std::string& id) {
    std::ifstream in(path);
    if (!in) throw FixtureMissingError("cannot open b-file " + path.string());
    return parse_bfile(in, id);
}

void atomic_write(const std::filesystem::path& path, const std::string& body) {
    std::filesystem::create_directories(path.parent_path());
    std::random_device rd;
    auto tmp = path;
    tmp += ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << body;
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

SequenceRecord fetch_network(const std::string& id, const std::string& digits,
                             const OeisConfig& config) {
    const auto cached = config.cache_dir / ("b" + digits + ".txt");
    if (std::filesystem::exists(cached)) return parse_file(cached, id);

    httplib::Client client("https://oeis.org");
    client.set_connection_timeout(config.timeout_seconds, 0);
    client.set_read_timeout(config.timeout_seconds, 0);
    client.set_follow_location(true);
    const std::string path = "/" + id + "/b" + digits + ".txt";
    auto res = client.Get(path);
    if (!res)
        throw NetworkError("fetching " + path + " failed: " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw NetworkError("fetching " + path + " failed: HTTP " + std::to_string(res->status));

    atomic_write(cached, res->body);
    std::istringstream in(res->body);
    return parse_bfile(in, id);
}

}  // namespace

SequenceRecord fetch_sequence(const std::string& id, FetchMode mode, const OeisConfig& config) {
    const std::string digits = require_valid_id(id);
    if (mode == FetchMode::fixture) {
        const auto path = config.fixture_dir / ("b" + digits + ".txt");
        if (!std::filesystem::exists(path))
            throw FixtureMissingError("no fixture for " + id + " at " + path.string());
        return parse_file(path, id);
    }
    return fetch_network(id, digits, config);
}

long complete_rows(const SequenceRecord& record, const ReadOrder& order) {
    long long available = static_cast<long long>(record.entries.size());
    long rows = 0;
    long long used = 0;
    while (used + (order.start_row + rows) <= available) {
        used += order.start_row + rows;
        ++rows;
    }
    return rows;
}

namespace {

std::string join_row(const std::vector<Int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ' ';
        out += values[i].get_str();
    }
    return out;
}

CheckReport compare_rows(const std::vector<std::vector<Int>>& rows_values,
                         const SequenceRecord& record, const ReadOrder& order) {
    CheckReport report;
    report.identity = "oeis:" + record.id;
    report.params = "rows from n=" + std::to_string(order.start_row);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < rows_values.size(); ++i) {
        const long n = order.start_row + static_cast<long>(i);
        const auto& ours = rows_values[i];
        std::vector<Int> theirs;
        theirs.reserve(ours.size());
        bool pass = true;
        std::string note;
        for (std::size_t k = 0; k < ours.size(); ++k, ++pos) {
            if (pos >= record.entries.size())
                throw std::invalid_argument("sequence " + record.id + " too short: row " +
                                            std::to_string(n) + " needs entry " +
                                            std::to_string(pos + 1));
            theirs.push_back(record.entries[pos].value);
            if (pass && ours[k] != theirs.back()) {
                pass = false;
                note = " [first mismatch at n=" + std::to_string(n) +
                       " k=" + std::to_string(static_cast<long>(k) + order.column_shift) + "]";
            }
        }
        report.items.push_back({n, join_row(theirs) + note, join_row(ours), pass});
    }
    return report;
}

Int integer_entry(const exactmath::Rational& value, long n, long k) {
    if (!value.is_integer())
        throw std::invalid_argument("triangle entry G(" + std::to_string(n) + "," +
                                    std::to_string(k) + ") = " + value.str() +
                                    " is not an integer; cannot compare with an OEIS b-file");
    return value.num();
}

}  // namespace

CheckReport compare_triangle(const triangles::Triangle& t, const SequenceRecord& s,
                             const ReadOrder& order, long rows) {
    std::vector<std::vector<Int>> values;
    for (long n = order.start_row; n < order.start_row + rows; ++n) {
        auto row = t.row(n);
        std::vector<Int> ints;
        ints.reserve(row.size());
        for (std::size_t k = 0; k < row.size(); ++k)
            ints.push_back(integer_entry(row[k], n, static_cast<long>(k)));
        values.push_back(std::move(ints));
    }
    return compare_rows(values, s, order);
}

CheckReport compare_m_triangle_abs(const triangles::MTriangle& t, const SequenceRecord& s,
                                   const ReadOrder& order, long rows) {
    std::vector<std::vector<Int>> values;
    for (long n = order.start_row; n < order.start_row + rows; ++n) {
        auto row = t.row(n);
        std::vector<Int> ints;
        ints.reserve(row.size());
        for (std::size_t k = 0; k < row.size(); ++k)
            ints.push_back(abs(integer_entry(row[k], n, static_cast<long>(k))));
        values.push_back(std::move(ints));
    }
    return compare_rows(values, s, order);
}

std::string probe_a160468(long n_max, const SequenceRecord& record) {
    if (record.entries.empty())
        throw FixtureMissingError("sequence A160468 unavailable (no entries)");
    if (n_max < 1) throw std::invalid_argument("probe needs n_max >= 1");

    triangles::Triangle t({exactmath::Rational(1, 2), exactmath::Rational(1)}, n_max);
    std::ostringstream os;
    os << "odd rows of the (1/2, 1) triangle:\n";
    for (long n = 1; n <= n_max; n += 2) {
        os << "  n=" << n << ":";
        for (const auto& v : t.row(n)) os << ' ' << v.str();
        os << '\n';
    }
    os << "A160468 entries (" << record.entries.size() << " available):\n ";
    for (const auto& e : record.entries) os << ' ' << e.value.get_str();
    os << '\n';
    os << "no automatic comparison: the row correspondence is left to inspection\n";
    return os.str();
}

}  // namespace eulergen::oeis
