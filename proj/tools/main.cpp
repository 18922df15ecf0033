// gnomon command-line tool. Everything goes through the C API of
// libgnomon; this translation unit never touches the C++ core.

#include <algorithm>
#include <array>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gnomon/gnomon.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

constexpr std::uint64_t kBruteForceCap = 100000000; // 10^8

const char* const kFieldNames[GNOMON_FIELD_COUNT] = {"s", "t", "l", "m", "n", "x", "y", "z"};

int fail_usage(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

int fail_api(gnomon_status status) {
    std::cerr << "error: " << gnomon_status_name(status) << ": " << gnomon_last_error() << "\n";
    return kExitUsage;
}

struct Row {
    std::array<std::string, GNOMON_FIELD_COUNT> fields;
};

Row row_from_record(const gnomon_record* rec) {
    Row row;
    for (int i = 0; i < GNOMON_FIELD_COUNT; ++i) {
        const auto field = static_cast<gnomon_field>(i);
        std::uint64_t v = 0;
        if (gnomon_record_u64(rec, field, &v) == GNOMON_OK) {
            row.fields[i] = std::to_string(v);
        } else {
            char* s = gnomon_record_str(rec, field);
            row.fields[i] = s;
            gnomon_string_free(s);
        }
    }
    return row;
}

std::string jsonl_line(const Row& row) {
    std::string out = "{";
    for (int i = 0; i < GNOMON_FIELD_COUNT; ++i) {
        out += '"';
        out += kFieldNames[i];
        out += "\":";
        out += row.fields[i];
        out += i + 1 < GNOMON_FIELD_COUNT ? "," : "}";
    }
    return out;
}

void print_table(const std::vector<Row>& rows) {
    std::array<std::size_t, GNOMON_FIELD_COUNT> width;
    for (int i = 0; i < GNOMON_FIELD_COUNT; ++i) {
        width[i] = std::strlen(kFieldNames[i]);
        for (const Row& r : rows)
            width[i] = std::max(width[i], r.fields[i].size());
    }
    auto line = [&](const std::array<std::string, GNOMON_FIELD_COUNT>& cells) {
        std::string out;
        for (int i = 0; i < GNOMON_FIELD_COUNT; ++i) {
            if (i > 0)
                out += "  ";
            out.append(width[i] - cells[i].size(), ' ');
            out += cells[i];
        }
        std::cout << out << "\n";
    };
    std::array<std::string, GNOMON_FIELD_COUNT> header;
    for (int i = 0; i < GNOMON_FIELD_COUNT; ++i)
        header[i] = kFieldNames[i];
    line(header);
    for (const Row& r : rows)
        line(r.fields);
}

void print_rows(const std::vector<Row>& rows, bool jsonl) {
    if (jsonl) {
        for (const Row& r : rows)
            std::cout << jsonl_line(r) << "\n";
    } else {
        print_table(rows);
    }
}

// Strict natural-number check; the library re-validates, this only
// exists for bounds the CLI itself must reason about.
bool parse_bounded(const std::string& text, std::uint64_t cap, std::uint64_t* out) {
    if (text.empty() || text.size() > 20)
        return false;
    std::uint64_t v = 0;
    for (char c : text) {
        if (c < '0' || c > '9')
            return false;
        if (v > cap) // keeps accumulating digits from overflowing
            return false;
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    if (v > cap)
        return false;
    *out = v;
    return true;
}

int cmd_triples(const std::string& s, bool jsonl) {
    gnomon_record_list* list = nullptr;
    if (gnomon_status st = gnomon_records_for_side(s.c_str(), &list); st != GNOMON_OK)
        return fail_api(st);
    std::vector<Row> rows;
    for (std::size_t i = 0; i < gnomon_record_list_size(list); ++i)
        rows.push_back(row_from_record(gnomon_record_list_at(list, i)));
    gnomon_record_list_free(list);
    print_rows(rows, jsonl);
    return kExitOk;
}

int cmd_count(const std::string& s) {
    char* count = nullptr;
    if (gnomon_status st = gnomon_count_partitions(s.c_str(), &count); st != GNOMON_OK)
        return fail_api(st);
    std::cout << count << "\n";
    gnomon_string_free(count);
    return kExitOk;
}

int cmd_enumerate(const std::string& max_s, const std::string& max_z, bool jsonl) {
    if (max_s.empty() == max_z.empty())
        return fail_usage("enumerate needs exactly one of --max-s or --max-z");
    const bool by_side = !max_s.empty();
    const std::string& bound = by_side ? max_s : max_z;

    gnomon_enumerator* en = nullptr;
    gnomon_status st = gnomon_enumerator_open(
        by_side ? GNOMON_BOUND_SIDE : GNOMON_BOUND_HYPOTENUSE, bound.c_str(), &en);
    if (st != GNOMON_OK)
        return fail_api(st);

    if (!jsonl) {
        // streaming: column widths fixed up front (z < bound^2 either way)
        const std::size_t w = std::max<std::size_t>(6, 2 * bound.size() + 1);
        std::string header;
        for (int i = 0; i < GNOMON_FIELD_COUNT; ++i) {
            if (i > 0)
                header += "  ";
            header.append(w - std::strlen(kFieldNames[i]), ' ');
            header += kFieldNames[i];
        }
        std::cout << header << "\n" << std::flush;
        const gnomon_record* rec = nullptr;
        while ((st = gnomon_enumerator_next(en, &rec)) == GNOMON_OK) {
            const Row row = row_from_record(rec);
            std::string out;
            for (int i = 0; i < GNOMON_FIELD_COUNT; ++i) {
                if (i > 0)
                    out += "  ";
                if (row.fields[i].size() < w)
                    out.append(w - row.fields[i].size(), ' ');
                out += row.fields[i];
            }
            out += "\n";
            std::fwrite(out.data(), 1, out.size(), stdout);
            std::fflush(stdout); // flushed per record so pipes stream
        }
    } else {
        const gnomon_record* rec = nullptr;
        while ((st = gnomon_enumerator_next(en, &rec)) == GNOMON_OK) {
            std::string out = jsonl_line(row_from_record(rec));
            out += "\n";
            std::fwrite(out.data(), 1, out.size(), stdout);
            std::fflush(stdout);
        }
    }
    gnomon_enumerator_free(en);
    if (st != GNOMON_END)
        return fail_api(st);
    return kExitOk;
}

using Triple = std::array<std::uint64_t, 3>;

int cmd_verify(const std::string& bound) {
    std::uint64_t z_max = 0;
    if (!parse_bounded(bound, kBruteForceCap, &z_max) || z_max < 1)
        return fail_usage("--max-z must be an integer in [1, 10^8]; brute force beyond that "
                          "is not attempted");

    // source 1: brute-force scan of leg pairs
    std::vector<Triple> brute;
    {
        gnomon_triple_list* list = nullptr;
        if (gnomon_status st = gnomon_brute_force_triples(z_max, &list); st != GNOMON_OK)
            return fail_api(st);
        for (std::size_t i = 0; i < gnomon_triple_list_size(list); ++i) {
            Triple t{};
            gnomon_triple_list_get(list, i, &t[0], &t[1], &t[2]);
            brute.push_back(t);
        }
        gnomon_triple_list_free(list);
    }

    // source 2: generating-square construction over even sides
    std::vector<Triple> construction;
    {
        gnomon_enumerator* en = nullptr;
        if (gnomon_status st =
                gnomon_enumerator_open(GNOMON_BOUND_HYPOTENUSE, bound.c_str(), &en);
            st != GNOMON_OK)
            return fail_api(st);
        const gnomon_record* rec = nullptr;
        gnomon_status st;
        while ((st = gnomon_enumerator_next(en, &rec)) == GNOMON_OK) {
            Triple t{};
            gnomon_record_u64(rec, GNOMON_FIELD_X, &t[0]);
            gnomon_record_u64(rec, GNOMON_FIELD_Y, &t[1]);
            gnomon_record_u64(rec, GNOMON_FIELD_Z, &t[2]);
            construction.push_back(t);
        }
        gnomon_enumerator_free(en);
        if (st != GNOMON_END)
            return fail_api(st);
    }

    // source 3: Euclid's formulas over coprime (m, n) of opposite parity
    std::vector<Triple> euclid;
    for (std::uint64_t m = 2; m * m + 1 <= z_max; ++m) {
        for (std::uint64_t n = 1; n < m; ++n) {
            const std::uint64_t z = m * m + n * n;
            if (z > z_max)
                break;
            if ((m + n) % 2 == 1 && std::gcd(m, n) == 1)
                euclid.push_back({m * m - n * n, 2 * m * n, z});
        }
    }

    auto by_z_x = [](const Triple& a, const Triple& b) {
        return a[2] != b[2] ? a[2] < b[2] : a[0] < b[0];
    };
    std::sort(construction.begin(), construction.end(), by_z_x);
    std::sort(euclid.begin(), euclid.end(), by_z_x);
    // brute force list is already sorted by (z, x)

    std::printf("verify: primitive Pythagorean triples with z <= %" PRIu64 "\n", z_max);
    std::printf("  brute force:   %zu\n", brute.size());
    std::printf("  construction:  %zu\n", construction.size());
    std::printf("  euclid:        %zu\n", euclid.size());

    bool ok = true;
    auto report_diff = [&](const char* label, const std::vector<Triple>& a,
                           const std::vector<Triple>& b) {
        if (a == b)
            return;
        ok = false;
        std::vector<Triple> missing, extra;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(missing),
                            by_z_x);
        std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(extra),
                            by_z_x);
        std::printf("  MISMATCH %s: %zu missing, %zu unexpected\n", label, missing.size(),
                    extra.size());
        for (std::size_t i = 0; i < missing.size() && i < 5; ++i)
            std::printf("    missing   (%" PRIu64 ", %" PRIu64 ", %" PRIu64 ")\n", missing[i][0],
                        missing[i][1], missing[i][2]);
        for (std::size_t i = 0; i < extra.size() && i < 5; ++i)
            std::printf("    unexpected (%" PRIu64 ", %" PRIu64 ", %" PRIu64 ")\n", extra[i][0],
                        extra[i][1], extra[i][2]);
    };
    report_diff("construction vs brute force", brute, construction);
    report_diff("euclid vs brute force", brute, euclid);

    std::printf("agreement: %s\n", ok ? "yes" : "NO");
    return ok ? kExitOk : kExitMismatch;
}

int cmd_families(const std::string& family, const std::string& k, const std::string& m,
                 const std::string& n, bool jsonl) {
    gnomon_record* rec = nullptr;
    gnomon_status st = GNOMON_ERR_UNKNOWN;
    if (family == "pythagoras") {
        if (k.empty())
            return fail_usage("families pythagoras needs --k");
        st = gnomon_pythagoras_record(k.c_str(), &rec);
    } else if (family == "plato") {
        if (m.empty())
            return fail_usage("families plato needs --m");
        st = gnomon_plato_record(m.c_str(), &rec);
    } else if (family == "euclid") {
        if (m.empty() || n.empty())
            return fail_usage("families euclid needs --m and --n");
        st = gnomon_euclid_record(m.c_str(), n.c_str(), &rec);
    } else {
        return fail_usage("unknown family '" + family + "' (pythagoras, plato, euclid)");
    }
    if (st != GNOMON_OK)
        return fail_api(st);
    print_rows({row_from_record(rec)}, jsonl);
    gnomon_record_free(rec);
    return kExitOk;
}

int cmd_render(const std::string& s, std::uint64_t index, const std::string& stage,
               const std::string& out_path) {
    gnomon_stage st_enum;
    if (stage == "square_sequence")
        st_enum = GNOMON_STAGE_SQUARE_SEQUENCE;
    else if (stage == "gnomon_t")
        st_enum = GNOMON_STAGE_GNOMON_T;
    else if (stage == "gnomon_u")
        st_enum = GNOMON_STAGE_GNOMON_U;
    else
        return fail_usage("unknown stage '" + stage +
                          "' (square_sequence, gnomon_t, gnomon_u)");

    char* svg = nullptr;
    if (gnomon_status st = gnomon_render(s.c_str(), index, st_enum, 10, 1, 1, &svg);
        st != GNOMON_OK)
        return fail_api(st);
    int rc = kExitOk;
    if (out_path.empty() || out_path == "-") {
        std::cout << svg;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        f << svg;
        if (!f) {
            std::cerr << "error: cannot write " << out_path << "\n";
            rc = kExitUsage;
        }
    }
    gnomon_string_free(svg);
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"primitive Pythagorean triples via the generating-square construction"};
    app.require_subcommand(1);

    std::string format = "table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "jsonl"}))
        ->capture_default_str();

    std::string side, bound_s, bound_z, family, k_arg, m_arg, n_arg, stage = "gnomon_u",
                                                                     out_path;
    std::uint64_t index = 0;

    auto* triples = app.add_subcommand("triples", "all partitions and triples for one even side");
    triples->add_option("--s", side, "even side of the generating square")->required();

    auto* count = app.add_subcommand("count", "number of partitions L(S) = 2^r");
    count->add_option("--s", side, "even side of the generating square")->required();

    auto* enumerate = app.add_subcommand("enumerate", "stream records over even sides");
    enumerate->add_option("--max-s", bound_s, "largest side to enumerate");
    enumerate->add_option("--max-z", bound_z, "largest hypotenuse to keep");

    auto* verify = app.add_subcommand("verify", "cross-check construction, Euclid, brute force");
    verify->add_option("--max-z", bound_z, "hypotenuse bound (at most 10^8)")->required();

    auto* families = app.add_subcommand("families", "classical generator families");
    families->add_option("family", family, "pythagoras, plato or euclid")->required();
    families->add_option("--k", k_arg, "Pythagoras index (k >= 1)");
    families->add_option("--m", m_arg, "Plato even m, or Euclid m");
    families->add_option("--n", n_arg, "Euclid n");

    auto* render = app.add_subcommand("render", "emit an SVG diagram of the construction");
    render->add_option("--s", side, "even side of the generating square")->required();
    render->add_option("--index", index, "partition index (subset-bitmask order)")->required();
    render->add_option("--stage", stage, "square_sequence, gnomon_t or gnomon_u")
        ->capture_default_str();
    render->add_option("--out", out_path, "output path (default: stdout)");

    for (CLI::App* sub : app.get_subcommands({}))
        sub->fallthrough(); // lets --format appear after the subcommand too

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const bool jsonl = format == "jsonl";
    if (triples->parsed())
        return cmd_triples(side, jsonl);
    if (count->parsed())
        return cmd_count(side);
    if (enumerate->parsed())
        return cmd_enumerate(bound_s, bound_z, jsonl);
    if (verify->parsed())
        return cmd_verify(bound_z);
    if (families->parsed())
        return cmd_families(family, k_arg, m_arg, n_arg, jsonl);
    if (render->parsed())
        return cmd_render(side, index, stage, out_path);
    return fail_usage("no command");
}
