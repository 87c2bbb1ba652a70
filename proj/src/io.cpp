#include "pradius/io.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace pradius {

namespace {

// Pulls non-comment, non-blank lines and remembers line numbers for errors.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& out) {
        std::string line;
        while (std::getline(in_, line)) {
            ++number_;
            std::size_t i = 0;
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i == line.size() || line[i] == '#') continue;
            out = line;
            return true;
        }
        return false;
    }

    int number() const { return number_; }

private:
    std::istream& in_;
    int number_ = 0;
};

[[noreturn]] void fail(const LineReader& reader, const std::string& what) {
    throw ParseError("line " + std::to_string(reader.number()) + ": " + what);
}

std::vector<long long> numbers_of(const std::string& line, const LineReader& reader) {
    std::istringstream ss(line);
    std::vector<long long> out;
    long long v;
    while (ss >> v) out.push_back(v);
    std::string rest;
    if (ss.clear(), ss >> rest)
        fail(reader, "unexpected token '" + rest + "'");
    return out;
}

}  // namespace

PosetFile read_poset(std::istream& in) {
    LineReader reader(in);
    std::string line;
    if (!reader.next(line)) throw ParseError("empty poset file");

    std::istringstream head(line);
    std::string first;
    head >> first;
    if (first == "matrix") {
        long long n = 0;
        if (!(head >> n) || n < 1) fail(reader, "expected 'matrix n' with n >= 1");
        std::string extra;
        if (head >> extra) fail(reader, "unexpected token '" + extra + "'");
        std::vector<std::vector<int>> rows;
        for (long long r = 0; r < n; ++r) {
            if (!reader.next(line)) fail(reader, "matrix row missing");
            std::vector<long long> vals = numbers_of(line, reader);
            if (static_cast<long long>(vals.size()) != n)
                fail(reader, "expected " + std::to_string(n) + " entries in matrix row");
            std::vector<int> row;
            row.reserve(vals.size());
            for (long long v : vals) {
                if (v != 0 && v != 1) fail(reader, "matrix entries must be 0 or 1");
                row.push_back(static_cast<int>(v));
            }
            rows.push_back(std::move(row));
        }
        if (reader.next(line)) fail(reader, "trailing content after matrix rows");
        return {Poset::from_adjacency_matrix(rows), true};
    }

    // Relation format: first line is n, every further line one pair "a b".
    long long n = 0;
    {
        std::istringstream ss(line);
        std::string extra;
        if (!(ss >> n) || n < 1) fail(reader, "expected the ground-set size n >= 1");
        if (ss >> extra) fail(reader, "unexpected token '" + extra + "' after n");
    }
    std::vector<std::pair<int, int>> relations;
    while (reader.next(line)) {
        std::vector<long long> vals = numbers_of(line, reader);
        if (vals.size() != 2) fail(reader, "expected a relation line 'a b'");
        if (vals[0] < 1 || vals[0] > n || vals[1] < 1 || vals[1] > n)
            fail(reader, "relation element outside 1.." + std::to_string(n));
        relations.emplace_back(static_cast<int>(vals[0]), static_cast<int>(vals[1]));
    }
    return {Poset::from_cover_relations(static_cast<int>(n), relations), false};
}

LinearCode read_code(std::istream& in) {
    LineReader reader(in);
    std::string line;
    if (!reader.next(line)) throw ParseError("empty code file");
    std::vector<long long> head = numbers_of(line, reader);
    if (head.size() != 3) fail(reader, "expected header 'q n k'");
    const long long q = head[0], n = head[1], k = head[2];
    if (q < 2 || n < 1 || k < 0 || k > n) fail(reader, "bad code parameters q n k");
    std::vector<std::vector<int>> gen;
    for (long long r = 0; r < k; ++r) {
        if (!reader.next(line)) fail(reader, "generator row missing");
        std::vector<long long> vals = numbers_of(line, reader);
        if (static_cast<long long>(vals.size()) != n)
            fail(reader, "expected " + std::to_string(n) + " entries in generator row");
        std::vector<int> row;
        row.reserve(vals.size());
        for (long long v : vals) {
            if (v < 0 || v >= q) fail(reader, "generator entry outside [0, q)");
            row.push_back(static_cast<int>(v));
        }
        gen.push_back(std::move(row));
    }
    if (reader.next(line)) fail(reader, "trailing content after generator rows");
    return LinearCode(static_cast<int>(q), static_cast<int>(n), std::move(gen));
}

IntList read_int_list(std::istream& in) {
    LineReader reader(in);
    std::string line;
    IntList values;
    while (reader.next(line)) {
        for (long long v : numbers_of(line, reader)) {
            if (v < 1) fail(reader, "list values must be positive, got " + std::to_string(v));
            values.push_back(v);
        }
    }
    if (values.empty()) throw ParseError("empty list file");
    return values;
}

void write_poset_matrix(std::ostream& out, const Poset& p) {
    out << "matrix " << p.size() << "\n";
    for (const auto& row : p.adjacency_matrix()) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << " ";
            out << row[j];
        }
        out << "\n";
    }
}

void write_poset_relations(std::ostream& out, const Poset& p) {
    out << p.size() << "\n";
    for (auto [a, b] : p.strict_pairs()) out << a << " " << b << "\n";
}

FieldVector parse_vector_literal(const std::string& text, int q) {
    if (text.empty()) throw ParseError("empty vector literal");
    std::vector<int> coords;
    if (text.find(',') == std::string::npos) {
        if (q > 10) {
            // Digit strings are ambiguous past q = 10, so a comma-less
            // literal can only be a single residue (a length-one vector).
            try {
                std::size_t used = 0;
                const int v = std::stoi(text, &used);
                if (used != text.size() || v < 0) throw std::invalid_argument(text);
                if (v >= q)
                    throw ParseError("vector entry " + std::to_string(v) + " outside [0, " +
                                     std::to_string(q) + ")");
                return FieldVector(q, {v});
            } catch (const std::invalid_argument&) {
                throw ParseError("bad vector entry '" + text + "'");
            } catch (const std::out_of_range&) {
                throw ParseError("bad vector entry '" + text + "'");
            }
        }
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError(std::string("bad vector digit '") + c + "'");
            const int v = c - '0';
            if (v >= q)
                throw ParseError("vector digit " + std::to_string(v) + " outside [0, " +
                                 std::to_string(q) + ")");
            coords.push_back(v);
        }
    } else {
        std::istringstream ss(text);
        std::string token;
        while (std::getline(ss, token, ',')) {
            try {
                std::size_t used = 0;
                const int v = std::stoi(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
                if (v < 0 || v >= q)
                    throw ParseError("vector entry " + std::to_string(v) + " outside [0, " +
                                     std::to_string(q) + ")");
                coords.push_back(v);
            } catch (const std::invalid_argument&) {
                throw ParseError("bad vector entry '" + token + "'");
            } catch (const std::out_of_range&) {
                throw ParseError("bad vector entry '" + token + "'");
            }
        }
        if (coords.empty()) throw ParseError("empty vector literal");
    }
    return FieldVector(q, std::move(coords));
}

std::string format_vector(const FieldVector& v) {
    std::string out;
    if (v.q <= 10) {
        for (int c : v.coords) out += static_cast<char>('0' + c);
    } else {
        for (std::size_t i = 0; i < v.coords.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(v.coords[i]);
        }
    }
    return out;
}

}  // namespace pradius
