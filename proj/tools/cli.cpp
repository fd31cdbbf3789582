#include "cli.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "genocchi/enumerate.hpp"
#include "genocchi/errors.hpp"
#include "genocchi/maps.hpp"
#include "genocchi/triangles.hpp"
#include "genocchi/verify.hpp"
#include "json.hpp"

namespace genocchi::cli {

namespace {

using nlohmann::json;

enum class Format { text, csv, json };

struct Invocation {
    Format format = Format::text;

    std::string triangle_kind;
    std::size_t rows = 0;

    std::string sequence_kind;
    std::size_t count = 0;

    std::string model;
    int n = 0;
    bool stats = false;
    std::string by;
    int max_order = EnumerationOptions{}.max_order;

    std::string op;
    std::string input;
    bool has_input = false;

    int max_n = SuiteOptions{}.max_n;
    int pairs_n = SuiteOptions{}.pairs_n;
    int pairs_guard = SuiteOptions{}.pairs_guard;
    unsigned threads = 1;
    bool json_report = false;
    std::string redundancy = "corrected";
};

// Quotes a CSV field when it holds a separator.
std::string csv_field(const std::string& text) {
    if (text.find_first_of(",;\"") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + '"';
}

std::vector<std::string> decimal(const BigRow& row) {
    std::vector<std::string> out;
    for (const BigInt& v : row) out.push_back(v.get_str());
    return out;
}

int cmd_triangle(const Invocation& inv, std::ostream& out) {
    std::vector<BigRow> rows;
    for (std::size_t i = 1; i <= inv.rows; ++i)
        rows.push_back(inv.triangle_kind == "kreweras" ? kreweras_row(i) : seidel_table().row(i));
    switch (inv.format) {
        case Format::text:
            for (const BigRow& row : rows) {
                for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j].get_str();
                out << '\n';
            }
            break;
        case Format::csv:
            out << "row,column,value\n";
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < rows[i].size(); ++j)
                    out << i + 1 << ',' << j + 1 << ',' << rows[i][j].get_str() << '\n';
            break;
        case Format::json: {
            json doc = {{"triangle", inv.triangle_kind}, {"rows", json::array()}};
            for (const BigRow& row : rows) doc["rows"].push_back(decimal(row));
            out << doc.dump() << '\n';
            break;
        }
    }
    return kSuccess;
}

int cmd_sequence(const Invocation& inv, std::ostream& out) {
    const std::size_t first = inv.sequence_kind == "genocchi" ? 1 : 0;
    std::vector<std::pair<std::size_t, BigInt>> values;
    for (std::size_t i = first; i < first + inv.count; ++i) {
        if (inv.sequence_kind == "genocchi")
            values.emplace_back(i, genocchi(i));
        else if (inv.sequence_kind == "median")
            values.emplace_back(i, median_genocchi(i));
        else
            values.emplace_back(i, normalized_genocchi(i));
    }
    switch (inv.format) {
        case Format::text:
            for (const auto& [i, v] : values) out << v.get_str() << '\n';
            break;
        case Format::csv:
            out << "index,value\n";
            for (const auto& [i, v] : values) out << i << ',' << v.get_str() << '\n';
            break;
        case Format::json: {
            json doc = {{"sequence", inv.sequence_kind}, {"first_index", first}, {"values", json::array()}};
            for (const auto& [i, v] : values) doc["values"].push_back(v.get_str());
            out << doc.dump() << '\n';
            break;
        }
    }
    return kSuccess;
}

int cmd_enumerate(const Invocation& inv, std::ostream& out) {
    const Model model = parse_model(inv.model);
    bool first = true;
    if (inv.format == Format::csv) out << (inv.stats ? "object,k,l\n" : "object\n");
    if (inv.format == Format::json) out << '[';
    enumerate(
        model, inv.n,
        [&](const ModelObject& o) {
            const std::string text = serialize(o);
            switch (inv.format) {
                case Format::text:
                    out << text;
                    if (inv.stats) {
                        const Statistics s = statistics(o);
                        out << "\tk=" << s.k << " l=" << s.l;
                    }
                    out << '\n';
                    break;
                case Format::csv:
                    out << csv_field(text);
                    if (inv.stats) {
                        const Statistics s = statistics(o);
                        out << ',' << s.k << ',' << s.l;
                    }
                    out << '\n';
                    break;
                case Format::json: {
                    json item = {{"object", text}};
                    if (inv.stats) {
                        const Statistics s = statistics(o);
                        item["k"] = s.k;
                        item["l"] = s.l;
                    }
                    out << (first ? "" : ",") << item.dump();
                    break;
                }
            }
            first = false;
        },
        {inv.max_order, {}});
    if (inv.format == Format::json) out << "]\n";
    return kSuccess;
}

int cmd_count(const Invocation& inv, std::ostream& out) {
    const Model model = parse_model(inv.model);
    const ConsistencyReport report = count_matrix(inv.n, inv.max_order);
    const CellReport& cell = *report.find(inv.n, std::string(model_name(model)));
    if (inv.by.empty()) {
        switch (inv.format) {
            case Format::text: out << cell.total << '\n'; break;
            case Format::csv: out << "model,n,total\n" << cell.model << ',' << inv.n << ',' << cell.total << '\n'; break;
            case Format::json:
                out << json{{"model", cell.model}, {"n", inv.n}, {"total", cell.total}}.dump() << '\n';
                break;
        }
        return kSuccess;
    }
    const auto& hist = inv.by == "k" ? cell.k_hist : cell.l_hist;
    switch (inv.format) {
        case Format::text:
            for (std::size_t i = 0; i < hist.size(); ++i) out << (i ? " " : "") << hist[i];
            out << '\n';
            break;
        case Format::csv:
            out << inv.by << ",count\n";
            for (std::size_t i = 0; i < hist.size(); ++i) out << i + 1 << ',' << hist[i] << '\n';
            break;
        case Format::json:
            out << json{{"model", cell.model}, {"n", inv.n}, {"by", inv.by}, {"histogram", hist}}.dump() << '\n';
            break;
    }
    return kSuccess;
}

std::string read_input(const Invocation& inv, std::istream& in) {
    if (inv.has_input && inv.input != "-") return inv.input;
    std::string line;
    std::getline(in, line);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

std::string apply_map(const Invocation& inv, const std::string& text) {
    const std::string& op = inv.op;
    if (op == "phi") return serialize(phi(parse_chain(text)));
    if (op == "phi-inv") return serialize(phi_inverse(parse_hetyei(text)));
    if (op == "to-settuple") return serialize(chain_to_settuple(parse_chain(text)));
    if (op == "to-chain") return serialize(settuple_to_chain(parse_settuple(text)));
    if (op == "embed") return serialize(embed_permutation(parse_permutation(text)));
    if (inv.model.empty()) throw CLI::ValidationError("--model", "op '" + op + "' needs --model pd2n|dellac|settuple");
    const Model model = parse_model(inv.model);
    if (!has_involutions(model))
        throw CLI::ValidationError("--model", "op '" + op + "' acts on pd2n, dellac or settuple only");
    const ModelObject object = parse(model, text);
    if (op == "t") return serialize(involution_t(object));
    if (op == "r") return serialize(involution_r(object));
    if (op == "lift") return serialize(lift(object));
    return serialize(reduce(object));
}

int cmd_map(const Invocation& inv, std::istream& in, std::ostream& out) {
    const std::string text = read_input(inv, in);
    const std::string result = apply_map(inv, text);
    if (inv.format == Format::json)
        out << json{{"op", inv.op}, {"input", text}, {"output", result}}.dump() << '\n';
    else
        out << result << '\n';
    return kSuccess;
}

int cmd_verify(const Invocation& inv, std::ostream& out) {
    SuiteOptions options;
    options.max_n = inv.max_n;
    options.pairs_n = inv.pairs_n;
    options.pairs_guard = inv.pairs_guard;
    options.threads = inv.threads;
    options.max_order = inv.max_order;
    options.rule = inv.redundancy == "literal" ? RedundancyRule::literal : RedundancyRule::corrected;
    const ConsistencyReport report = run_suite(options);
    if (inv.json_report || inv.format == Format::json)
        out << to_json(report) << '\n';
    else
        out << to_text(report);
    return report.passed() ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Genocchi / Kreweras models: triangles, enumeration, bijections, verification", "genocchi"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    Invocation inv;
    const CLI::Validator model_name_check(
        [](std::string& name) {
            try {
                parse_model(name);
                return std::string();
            } catch (const ParseError& e) {
                return std::string(e.what());
            }
        },
        "MODEL", "model");
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();

    auto* triangle = app.add_subcommand("triangle", "Print rows of the Kreweras or Seidel triangle");
    triangle->add_option("kind", inv.triangle_kind)->required()->check(CLI::IsMember({"kreweras", "seidel"}));
    triangle->add_option("--rows", inv.rows)->required()->check(CLI::Range(1, 100000));

    auto* sequence = app.add_subcommand("sequence", "Print Genocchi, median Genocchi or normalized values");
    sequence->add_option("kind", inv.sequence_kind)
        ->required()
        ->check(CLI::IsMember({"genocchi", "median", "normalized"}));
    sequence->add_option("--count", inv.count)->required()->check(CLI::Range(1, 100000));

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List a family in canonical order");
    enumerate_cmd->add_option("--model", inv.model)->required()->check(model_name_check);
    enumerate_cmd->add_option("--n", inv.n)->required()->check(CLI::PositiveNumber);
    enumerate_cmd->add_flag("--stats", inv.stats, "Append k and l statistics");
    enumerate_cmd->add_option("--max-order", inv.max_order, "Enumeration guard")->capture_default_str();

    auto* count = app.add_subcommand("count", "Count a family, optionally by statistic");
    count->add_option("--model", inv.model)->required()->check(model_name_check);
    count->add_option("--n", inv.n)->required()->check(CLI::PositiveNumber);
    count->add_option("--by", inv.by)->check(CLI::IsMember({"k", "l"}));
    count->add_option("--max-order", inv.max_order, "Enumeration guard")->capture_default_str();

    auto* map = app.add_subcommand("map", "Apply a bijection, involution or reduction");
    map->add_option("--op", inv.op)
        ->required()
        ->check(CLI::IsMember({"phi", "phi-inv", "to-settuple", "to-chain", "t", "r", "reduce", "lift", "embed"}));
    map->add_option("--model", inv.model, "Family for t, r, reduce, lift")->check(model_name_check);
    auto* input_opt = map->add_option("--input", inv.input, "Object text; standard input when omitted or '-'");

    auto* verify = app.add_subcommand("verify", "Run the cross-model consistency suite");
    verify->add_option("--max-n", inv.max_n)->capture_default_str()->check(CLI::PositiveNumber);
    verify->add_option("--pairs-n", inv.pairs_n, "Largest n for the pair count (0: off)")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--pairs-guard", inv.pairs_guard)->capture_default_str();
    verify->add_option("--max-order", inv.max_order)->capture_default_str();
    verify->add_option("--threads", inv.threads)->capture_default_str()->check(CLI::Range(1U, 256U));
    verify->add_flag("--json", inv.json_report, "Emit the report as JSON");
    verify->add_option("--redundancy", inv.redundancy, "M-redundancy rule")
        ->check(CLI::IsMember({"corrected", "literal"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    inv.format = format == "csv" ? Format::csv : format == "json" ? Format::json : Format::text;
    inv.has_input = input_opt->count() > 0;

    try {
        if (*triangle) return cmd_triangle(inv, out);
        if (*sequence) return cmd_sequence(inv, out);
        if (*enumerate_cmd) return cmd_enumerate(inv, out);
        if (*count) return cmd_count(inv, out);
        if (*map) return cmd_map(inv, in, out);
        if (*verify) return cmd_verify(inv, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const InvariantError& e) {
        err << "error: invalid object (" << e.what() << ")\n";
        return kInvalidInput;
    } catch (const GuardError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace genocchi::cli
