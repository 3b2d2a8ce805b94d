// glho: exact combinatorics of GL(m|n) weights, GL(m|1) blocks and their
// homotopy-category invariants, with text and JSON output.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "glho/json_io.hpp"
#include "glho/parse.hpp"
#include "glho/selfcheck.hpp"

namespace {

using namespace glho;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCheckFailed = 3;

// "-" pulls the payload from stdin, so objects can be piped in.
std::string resolve_payload(const std::string& arg) {
    if (arg != "-") return arg;
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    std::string text = buf.str();
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    return text;
}

std::set<std::int64_t> parse_core_list(const std::string& text) {
    std::set<std::int64_t> core;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        core.insert(std::stoll(token));
    }
    return core;
}

struct KeyFlags {
    std::string core_text;
    std::int64_t base = 0;
    bool base_set = false;
    std::string weight_text;

    void attach(CLI::App* cmd) {
        cmd->add_option("--core", core_text, "comma-separated core labels (may be empty)");
        auto* base_opt = cmd->add_option("--base", base, "paired label of the index-0 simple");
        cmd->add_option("--weight", weight_text,
                        "representative atypical GL(m|1) weight instead of --core/--base");
        base_opt->each([this](const std::string&) { base_set = true; });
    }

    BlockKey key() const {
        if (!weight_text.empty()) return block_key(parse_weight(weight_text));
        if (!base_set) throw ParseError("need --base (or --weight) to fix the block");
        return BlockKey::make(parse_core_list(core_text), base);
    }
};

json label_sets_json(const LabelSets& ls) {
    return json{{"vee", std::vector<std::int64_t>(ls.vee.begin(), ls.vee.end())},
                {"wedge", std::vector<std::int64_t>(ls.wedge.begin(), ls.wedge.end())}};
}

std::string format_set(const std::set<std::int64_t>& s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (std::int64_t v : s) {
        os << (first ? " " : ", ") << v;
        first = false;
    }
    os << (first ? "}" : " }");
    return os.str();
}

std::string series_label(const KSeries& s, std::int64_t index) {
    std::int64_t shown = s.key ? position(*s.key, index) : index;
    std::string name = s.variant == SeriesVariant::simple ? "L" : "V";
    std::string out = name + "(" + std::to_string(shown) + ")";
    if (s.variant == SeriesVariant::kac_minus) out += "*";
    return out;
}

void print_series(std::ostream& os, const std::string& title, const KSeries& s) {
    os << title << "  (labels at block positions; exact for q^deg with deg >= "
       << s.truncation << ")\n";
    if (s.zero()) {
        os << "  0\n";
        return;
    }
    for (auto it = s.terms.rbegin(); it != s.terms.rend(); ++it) {
        std::ostringstream line;
        bool first = true;
        for (const auto& [label, coeff] : it->second) {
            if (!first) line << " + ";
            first = false;
            if (coeff != 1) line << coeff << "*";
            line << series_label(s, label);
        }
        os << "  q^" << it->first << (it->first >= s.truncation ? "  : " : " ~: ") << line.str()
           << '\n';
    }
}

json series_json(const KSeries& s) {
    json j = to_json(s);
    if (s.key) {
        for (auto& term : j["terms"]) {
            term["position"] = position(*s.key, term["label"].get<std::int64_t>());
        }
    }
    return j;
}

json ideal_class_json(const IdealClass& c) {
    return json{{"in_tplus", c.in_tplus}, {"in_tminus", c.in_tminus}, {"projective", c.projective}};
}

std::string ideal_class_text(const IdealClass& c) {
    std::ostringstream os;
    os << "T+: " << (c.in_tplus ? "yes" : "no") << ", T-: " << (c.in_tminus ? "yes" : "no")
       << ", projective: " << (c.projective ? "yes" : "no");
    return os.str();
}

std::string flag_list_text(const std::vector<FlagLabel>& flags) {
    std::ostringstream os;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        os << (i ? ", " : "") << format_flag_label(flags[i]);
    }
    return os.str();
}

json flag_list_json(const std::vector<FlagLabel>& flags) {
    json arr = json::array();
    for (const FlagLabel& f : flags) arr.push_back(json{{"index", f.index}, {"dual", f.dual}});
    return arr;
}

HoMorphism parse_arrow(const std::string& text) {
    // f(i,j) names the basis arrow S(j) -> S(i).
    std::size_t open = text.find('(');
    std::size_t comma = text.find(',', open);
    std::size_t close = text.find(')', comma);
    if (text.substr(0, open) != "f" || open == std::string::npos || comma == std::string::npos ||
        close == std::string::npos) {
        throw ParseError("expected an arrow of the form f(i,j)");
    }
    std::int64_t i = std::stoll(text.substr(open + 1, comma - open - 1));
    std::int64_t j = std::stoll(text.substr(comma + 1, close - comma - 1));
    return HoMorphism::basis(i, j);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact GL(m|n) weight, block and homotopy-category combinatorics"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "emit JSON instead of text");

    std::ostream& out = std::cout;
    int exit_code = kExitOk;

    auto sub = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
        CLI::App* cmd = parent->add_subcommand(name, desc);
        cmd->fallthrough();
        return cmd;
    };

    // ---- weight ----------------------------------------------------------
    CLI::App* weight_cmd = sub(&app, "weight", "weight invariants");
    weight_cmd->require_subcommand(1);
    {
        static std::string arg;
        CLI::App* info = sub(weight_cmd, "info", "degree, label sets and atypicality");
        info->add_option("weight", arg, "weight, e.g. \"0,0|0\"")->required();
        info->callback([&] {
            Weight w = parse_weight(resolve_payload(arg));
            Bidegree bd = deg_bidegree(w);
            LabelSets ls = label_sets(w);
            if (json_out) {
                out << json{{"weight", to_json(w)},
                            {"d", bd.d},
                            {"dprime", bd.dprime},
                            {"deg", bd.deg},
                            {"charge", central_charge(w)},
                            {"atypicality", atypicality(w)},
                            {"labels", label_sets_json(ls)}}
                           .dump(2)
                    << '\n';
                return;
            }
            out << "weight      : " << format_weight(w) << '\n'
                << "m|n         : " << w.m << "|" << w.n << '\n'
                << "bidegree    : (" << bd.d << ", " << bd.dprime << ")\n"
                << "deg         : " << bd.deg << '\n'
                << "charge      : " << central_charge(w) << '\n'
                << "atypicality : " << atypicality(w) << '\n'
                << "vee         : " << format_set(ls.vee) << '\n'
                << "wedge       : " << format_set(ls.wedge) << '\n';
        });

        static std::string twist_arg;
        static std::int64_t twist_k = 1;
        CLI::App* twist = sub(weight_cmd, "twist", "tensor with a Berezin power");
        twist->add_option("weight", twist_arg)->required();
        twist->add_option("-k,--power", twist_k, "Berezin exponent (default 1)");
        twist->callback([&] {
            Weight w = ber_twist(parse_weight(resolve_payload(twist_arg)), twist_k);
            if (json_out) {
                out << to_json(w).dump(2) << '\n';
            } else {
                out << format_weight(w) << '\n';
            }
        });
    }

    // ---- block -----------------------------------------------------------
    CLI::App* block_cmd = sub(&app, "block", "GL(m|1) block coordinates");
    block_cmd->require_subcommand(1);
    {
        static std::string arg;
        CLI::App* key_cmd = sub(block_cmd, "key", "block key of a representative weight");
        key_cmd->add_option("weight", arg)->required();
        key_cmd->callback([&] {
            BlockKey key = block_key(parse_weight(resolve_payload(arg)));
            if (json_out) {
                json j = to_json(key);
                j["m"] = key.m;
                j["charge"] = block_charge(key);
                out << j.dump(2) << '\n';
                return;
            }
            out << "core   : " << format_set(key.core) << '\n'
                << "base   : " << key.base << '\n'
                << "m      : " << key.m << '\n'
                << "charge : " << block_charge(key) << '\n';
        });

        static std::string nb_arg;
        static std::int64_t radius = 3;
        CLI::App* nb = sub(block_cmd, "neighbors", "indexed simples around the representative");
        nb->add_option("weight", nb_arg)->required();
        nb->add_option("--radius", radius, "index range (default 3)");
        nb->callback([&] {
            BlockKey key = block_key(parse_weight(resolve_payload(nb_arg)));
            json arr = json::array();
            for (std::int64_t i = -radius; i <= radius; ++i) {
                Weight w = weight_at(key, i);
                if (json_out) {
                    arr.push_back(json{{"index", i},
                                       {"position", position(key, i)},
                                       {"weight", to_json(w)},
                                       {"deg", block_deg(key, i)}});
                } else {
                    out << "L(" << i << ")  pos " << position(key, i) << "  deg "
                        << block_deg(key, i) << "  weight " << format_weight(w) << '\n';
                }
            }
            if (json_out) out << arr.dump(2) << '\n';
        });

        static std::string deg_arg;
        static std::int64_t deg_index = 0;
        CLI::App* deg_cmd = sub(block_cmd, "deg", "degree of the simple with a given index");
        deg_cmd->add_option("weight", deg_arg)->required();
        deg_cmd->add_option("-i,--index", deg_index, "block index (default 0)");
        deg_cmd->callback([&] {
            BlockKey key = block_key(parse_weight(resolve_payload(deg_arg)));
            if (json_out) {
                out << json{{"index", deg_index}, {"deg", block_deg(key, deg_index)}}.dump(2)
                    << '\n';
            } else {
                out << block_deg(key, deg_index) << '\n';
            }
        });
    }

    // ---- object ----------------------------------------------------------
    CLI::App* object_cmd = sub(&app, "object", "interval-module objects of one block");
    object_cmd->require_subcommand(1);
    {
        static std::string arg;
        for (const char* verb : {"reduce", "dual", "flags", "classify", "factors"}) {
            CLI::App* cmd = sub(object_cmd, verb, "");
            cmd->add_option("object", arg, "e.g. \"R[0,3] + 2*B[1,2] + P(0) + L(4)\"")->required();
            std::string action = verb;
            cmd->callback([&, action] {
                BlockObject x = parse_block_object(resolve_payload(arg));
                if (action == "reduce") {
                    HoObject h = ho_reduce(x);
                    out << (json_out ? to_json(h).dump(2) : format_ho_object(h)) << '\n';
                } else if (action == "dual") {
                    BlockObject d = twisted_dual(x);
                    out << (json_out ? to_json(d).dump(2) : format_block_object(d)) << '\n';
                } else if (action == "factors") {
                    auto factors = composition_factors(x);
                    if (json_out) {
                        json arr = json::array();
                        for (const auto& [i, mult] : factors) {
                            arr.push_back(json{{"index", i}, {"mult", mult}});
                        }
                        out << arr.dump(2) << '\n';
                    } else {
                        bool first = true;
                        for (const auto& [i, mult] : factors) {
                            for (std::int64_t c = 0; c < mult; ++c) {
                                out << (first ? "" : ", ") << "L(" << i << ")";
                                first = false;
                            }
                        }
                        out << (first ? "0" : "") << '\n';
                    }
                } else if (action == "flags") {
                    json arr = json::array();
                    for (const auto& [s, mult] : x.summands) {
                        BlockObject one;
                        one.add(s);
                        std::string label = format_block_object(one);
                        try {
                            KacFlags flags = kac_flag(s);
                            if (json_out) {
                                arr.push_back(json{{"summand", label},
                                                   {"mult", mult},
                                                   {"kac", flag_list_json(flags.kac)},
                                                   {"anti", flag_list_json(flags.anti)}});
                            } else {
                                out << label << " : ";
                                if (!flags.kac.empty()) out << "kac: " << flag_list_text(flags.kac);
                                if (!flags.kac.empty() && !flags.anti.empty()) out << " ; ";
                                if (!flags.anti.empty()) {
                                    out << "anti: " << flag_list_text(flags.anti);
                                }
                                out << '\n';
                            }
                        } catch (const NoFlag&) {
                            if (json_out) {
                                arr.push_back(json{{"summand", label},
                                                   {"mult", mult},
                                                   {"error", "NoFlag"}});
                            } else {
                                out << label << " : no standard flag\n";
                            }
                        }
                    }
                    if (json_out) out << arr.dump(2) << '\n';
                } else {  // classify
                    IdealClass agg = classify_ideal(x);
                    if (json_out) {
                        json per = json::array();
                        for (const auto& [s, mult] : x.summands) {
                            BlockObject one;
                            one.add(s);
                            per.push_back(json{{"summand", format_block_object(one)},
                                               {"mult", mult},
                                               {"class", ideal_class_json(classify_ideal(s))}});
                        }
                        out << json{{"aggregate", ideal_class_json(agg)}, {"summands", per}}.dump(2)
                            << '\n';
                    } else {
                        out << "aggregate : " << ideal_class_text(agg) << '\n';
                        for (const auto& [s, mult] : x.summands) {
                            BlockObject one;
                            one.add(s);
                            out << format_block_object(one) << " : "
                                << ideal_class_text(classify_ideal(s)) << '\n';
                        }
                    }
                }
            });
        }
    }

    // ---- hom -------------------------------------------------------------
    CLI::App* hom_cmd = sub(&app, "hom", "homotopy-category hom spaces and morphisms");
    hom_cmd->require_subcommand(1);
    {
        static std::string x_arg, y_arg;
        CLI::App* dim_cmd = sub(hom_cmd, "dim", "dimension of [X, Y]");
        dim_cmd->add_option("source", x_arg, "e.g. \"S(2)\"")->required();
        dim_cmd->add_option("target", y_arg, "e.g. \"S(0)\"")->required();
        dim_cmd->callback([&] {
            std::int64_t d = hom_dim(parse_ho_object(resolve_payload(x_arg)),
                                     parse_ho_object(resolve_payload(y_arg)));
            if (json_out) {
                out << json{{"dim", d}}.dump(2) << '\n';
            } else {
                out << d << '\n';
            }
        });

        static std::string range_arg = "-5..5";
        CLI::App* table_cmd = sub(hom_cmd, "table", "matrix of dim [S(i), S(j)]");
        table_cmd->add_option("--range", range_arg, "index range a..b (default -5..5)");
        table_cmd->callback([&] {
            std::size_t dots = range_arg.find("..");
            if (dots == std::string::npos) throw ParseError("range must look like a..b");
            std::int64_t lo = std::stoll(range_arg.substr(0, dots));
            std::int64_t hi = std::stoll(range_arg.substr(dots + 2));
            if (lo > hi) throw ParseError("range must be increasing");
            json rows = json::array();
            if (!json_out) {
                out << "dim [S(i), S(j)], rows i = " << lo << ".." << hi << ", columns j\n";
            }
            for (std::int64_t i = lo; i <= hi; ++i) {
                json row = json::array();
                for (std::int64_t j = lo; j <= hi; ++j) {
                    HoObject x, y;
                    x.add(HoSummand::S(i));
                    y.add(HoSummand::S(j));
                    std::int64_t d = hom_dim(x, y);
                    if (json_out) {
                        row.push_back(d);
                    } else {
                        out << d << (j == hi ? "\n" : " ");
                    }
                }
                rows.push_back(row);
            }
            if (json_out) {
                out << json{{"lo", lo}, {"hi", hi}, {"dims", rows}}.dump(2) << '\n';
            }
        });

        static std::string shift_arg;
        static std::int64_t shift_k = 1;
        CLI::App* shift_cmd = sub(hom_cmd, "shift", "suspension X[k]");
        shift_cmd->add_option("object", shift_arg)->required();
        shift_cmd->add_option("-k", shift_k, "shift amount (default 1)");
        shift_cmd->callback([&] {
            HoObject x = shift(parse_ho_object(resolve_payload(shift_arg)), shift_k);
            out << (json_out ? to_json(x).dump(2) : format_ho_object(x)) << '\n';
        });

        static std::string g_arg, f_arg;
        CLI::App* compose_cmd = sub(hom_cmd, "compose", "compose basis arrows g . f");
        compose_cmd->add_option("g", g_arg, "outer arrow f(i,j)")->required();
        compose_cmd->add_option("f", f_arg, "inner arrow f(j,k)")->required();
        compose_cmd->callback([&] {
            HoMorphism h = compose(parse_arrow(g_arg), parse_arrow(f_arg));
            if (json_out) {
                out << to_json(h).dump(2) << '\n';
            } else if (h.entries.empty()) {
                out << "0\n";
            } else {
                out << "f(" << h.dst[0] << "," << h.src[0] << ")";
                if (h.entries[0].coeff != 1) out << " x" << h.entries[0].coeff;
                out << '\n';
            }
        });

        static std::string iso_arg;
        CLI::App* iso_cmd = sub(hom_cmd, "isogeny", "image in the isogeny localization");
        iso_cmd->add_option("object", iso_arg)->required();
        iso_cmd->callback([&] {
            ParityCount p = isogeny_image(parse_ho_object(resolve_payload(iso_arg)));
            if (json_out) {
                out << json{{"ev", p.ev}, {"odd", p.odd}}.dump(2) << '\n';
            } else if (p.ev == 0 && p.odd == 0) {
                out << "0\n";
            } else {
                out << "{ev: " << p.ev << ", odd: " << p.odd << "}\n";
            }
        });

        static std::string ss_arg;
        static KeyFlags ss_key;
        CLI::App* ss_cmd = sub(hom_cmd, "ss", "image in the semisimple quotient");
        ss_cmd->add_option("object", ss_arg)->required();
        ss_key.attach(ss_cmd);
        ss_cmd->callback([&] {
            HoObject x = parse_ho_object(resolve_payload(ss_arg));
            x.key = ss_key.key();
            auto image = ss_image(x);
            if (json_out) {
                json arr = json::array();
                for (const auto& [w, mult] : image) {
                    arr.push_back(json{{"weight", to_json(w)}, {"mult", mult}});
                }
                out << arr.dump(2) << '\n';
                return;
            }
            if (image.empty()) {
                out << "0\n";
                return;
            }
            bool first = true;
            for (const auto& [w, mult] : image) {
                out << (first ? "" : " + ");
                first = false;
                if (mult != 1) out << mult << "*";
                out << "(" << format_weight(w) << ")";
            }
            out << '\n';
        });
    }

    // ---- series ----------------------------------------------------------
    CLI::App* series_cmd = sub(&app, "series", "Grothendieck-ring q-series");
    series_cmd->require_subcommand(1);
    {
        static KeyFlags mm_key;
        static std::int64_t mm_u = 0;
        static int mm_depth = 10;
        static bool mm_expand = false;
        CLI::App* mm_cmd = sub(series_cmd, "minimal-model", "omega and kernel series of L(u)");
        mm_key.attach(mm_cmd);
        mm_cmd->add_option("--u", mm_u, "block index of the simple (default 0)");
        mm_cmd->add_option("-N,--depth", mm_depth, "truncation depth (default 10)");
        mm_cmd->add_flag("--expand", mm_expand, "also print the simple-label expansions");
        mm_cmd->callback([&] {
            BlockKey key = mm_key.key();
            MinimalModelSeries mm = minimal_model_series(key, mm_u, mm_depth);
            if (json_out) {
                json j{{"omega", series_json(mm.omega)}, {"kernel", series_json(mm.kernel)}};
                if (mm_expand) {
                    j["omega_simples"] = series_json(expand_to_simples(mm.omega));
                    j["kernel_simples"] = series_json(expand_to_simples(mm.kernel));
                }
                out << j.dump(2) << '\n';
                return;
            }
            print_series(out, "omega", mm.omega);
            print_series(out, "kernel", mm.kernel);
            if (mm_expand) {
                print_series(out, "omega expanded", expand_to_simples(mm.omega));
                print_series(out, "kernel expanded", expand_to_simples(mm.kernel));
            }
        });

        static KeyFlags euler_key;
        static std::int64_t euler_u = 0;
        static int euler_depth = 10;
        CLI::App* euler_cmd = sub(series_cmd, "euler-check", "expand(omega) - expand(kernel)");
        euler_key.attach(euler_cmd);
        euler_cmd->add_option("--u", euler_u, "block index of the simple (default 0)");
        euler_cmd->add_option("-N,--depth", euler_depth, "truncation depth (default 10)");
        euler_cmd->callback([&] {
            BlockKey key = euler_key.key();
            KSeries e = euler_check(key, euler_u, euler_depth);
            if (json_out) {
                out << json{{"series", series_json(e)},
                            {"main", series_json(e.main_part())},
                            {"tail", series_json(e.tail())}}
                           .dump(2)
                    << '\n';
                return;
            }
            print_series(out, "euler difference", e);
        });

        static std::string flag_arg;
        static KeyFlags filt_key;
        CLI::App* filt_cmd = sub(series_cmd, "filtration", "canonical degree filtration of a flag");
        filt_cmd->add_option("flag", flag_arg, "e.g. \"V(1)@1 + V(0)@0\"")->required();
        filt_key.attach(filt_cmd);
        filt_cmd->callback([&] {
            KacFlagInput flag = parse_flag(resolve_payload(flag_arg));
            if (!filt_key.weight_text.empty() || filt_key.base_set) flag.key = filt_key.key();
            std::vector<FiltrationGroup> groups = degree_filtration(flag);
            if (json_out) {
                json arr = json::array();
                for (const FiltrationGroup& g : groups) {
                    json labels = json::array();
                    for (const auto& [label, mult] : g.labels) {
                        labels.push_back(json{{"label", label}, {"mult", mult}});
                    }
                    arr.push_back(json{{"degree", g.degree}, {"labels", labels}});
                }
                out << arr.dump(2) << '\n';
                return;
            }
            for (const FiltrationGroup& g : groups) {
                out << "degree " << g.degree << " : ";
                bool first = true;
                for (const auto& [label, mult] : g.labels) {
                    out << (first ? "" : ", ");
                    first = false;
                    if (mult != 1) out << mult << "*";
                    out << "V(" << label << ")";
                }
                out << '\n';
            }
        });

        static std::string expand_arg;
        CLI::App* expand_cmd = sub(series_cmd, "expand", "expand a Kac series JSON into simples");
        expand_cmd->add_option("series", expand_arg, "KSeries JSON document, or - for stdin")
            ->required();
        expand_cmd->callback([&] {
            KSeries s = kseries_from_json(json::parse(resolve_payload(expand_arg)));
            KSeries e = expand_to_simples(s);
            if (json_out) {
                out << series_json(e).dump(2) << '\n';
            } else {
                print_series(out, "expansion", e);
            }
        });
    }

    // ---- partitions --------------------------------------------------------
    CLI::App* parts_cmd = sub(&app, "partitions", "boxed-partition combinatorics");
    parts_cmd->require_subcommand(1);
    {
        static int box_n = 2;
        CLI::App* box_cmd = sub(parts_cmd, "box", "all partitions in the n x n box");
        box_cmd->add_option("-n", box_n, "box size")->required();
        box_cmd->callback([&] {
            std::vector<Partition> box = box_partitions(box_n);
            if (json_out) {
                json arr = json::array();
                for (const Partition& p : box) arr.push_back(to_json(p));
                out << json{{"count", box.size()}, {"partitions", arr}}.dump(2) << '\n';
                return;
            }
            for (const Partition& p : box) out << format_partition(p) << '\n';
            out << "count: " << box.size() << '\n';
        });

        static int sc_n = 1;
        CLI::App* sc_cmd = sub(parts_cmd, "selfconj", "number of self-conjugate box partitions");
        sc_cmd->add_option("-n", sc_n, "box size")->required();
        sc_cmd->callback([&] {
            std::int64_t count = count_self_conjugate(sc_n);
            if (json_out) {
                out << json{{"n", sc_n}, {"count", count}}.dump(2) << '\n';
            } else {
                out << count << '\n';
            }
        });

        static int dim_n = 2;
        static std::string dim_alpha;
        CLI::App* dim_cmd = sub(parts_cmd, "dim", "dimension of the GL(n) irreducible");
        dim_cmd->add_option("--alpha", dim_alpha, "partition, e.g. \"2,1\"")->required();
        dim_cmd->add_option("-n", dim_n, "rank")->required();
        dim_cmd->callback([&] {
            std::int64_t d = gl_dim(parse_partition(dim_alpha), dim_n);
            if (json_out) {
                out << json{{"dim", d}}.dump(2) << '\n';
            } else {
                out << d << '\n';
            }
        });

        static int cauchy_n = 2;
        CLI::App* cauchy_cmd = sub(parts_cmd, "cauchy", "exterior-algebra dimension identity");
        cauchy_cmd->add_option("-n", cauchy_n, "box size")->required();
        cauchy_cmd->callback([&] {
            CauchyResult r = cauchy_check(cauchy_n);
            if (json_out) {
                json arr = json::array();
                for (const auto& [a, b] : r.pairs) {
                    arr.push_back(json{{"alpha", to_json(a)}, {"transpose", to_json(b)}});
                }
                out << json{{"total", r.total}, {"pairs", arr}}.dump(2) << '\n';
                return;
            }
            for (const auto& [a, b] : r.pairs) {
                out << format_partition(a) << "  ^T " << format_partition(b) << "  dim "
                    << gl_dim(a, cauchy_n) << " x " << gl_dim(b, cauchy_n) << '\n';
            }
            out << "total: " << r.total << '\n';
        });

        static std::string lr_la, lr_mu, lr_nu;
        CLI::App* lr_cmd = sub(parts_cmd, "lr", "Littlewood-Richardson coefficient");
        lr_cmd->add_option("--lambda", lr_la, "first factor");
        lr_cmd->add_option("--mu", lr_mu, "second factor");
        lr_cmd->add_option("--nu", lr_nu, "target partition");
        lr_cmd->callback([&] {
            std::int64_t c = lr_mult(parse_partition(lr_la), parse_partition(lr_mu),
                                     parse_partition(lr_nu));
            if (json_out) {
                out << json{{"coefficient", c}}.dump(2) << '\n';
            } else {
                out << c << '\n';
            }
        });

        static int vv_n = 2;
        CLI::App* vv_cmd = sub(parts_cmd, "vvstar", "standard flag of V tensor V*");
        vv_cmd->add_option("-n", vv_n, "box size")->required();
        vv_cmd->callback([&] {
            std::vector<VVStarEntry> flag = vv_star_flag(vv_n);
            if (json_out) {
                json arr = json::array();
                for (const VVStarEntry& e : flag) {
                    arr.push_back(json{{"alpha", to_json(e.alpha)},
                                       {"transpose", to_json(e.alpha.transpose())},
                                       {"self_conjugate", e.max_atypical},
                                       {"dim", gl_dim(e.alpha, vv_n)},
                                       {"degree", e.degree}});
                }
                out << arr.dump(2) << '\n';
                return;
            }
            out << "partition  transpose  selfconj  dim  degree\n";
            for (const VVStarEntry& e : flag) {
                out << format_partition(e.alpha) << "  " << format_partition(e.alpha.transpose())
                    << "  " << (e.max_atypical ? "yes" : "no") << "  " << gl_dim(e.alpha, vv_n)
                    << "  " << e.degree << '\n';
            }
        });
    }

    // ---- check -------------------------------------------------------------
    CLI::App* check_cmd = sub(&app, "check", "verification suites");
    check_cmd->require_subcommand(1);
    {
        CLI::App* all_cmd = sub(check_cmd, "all", "run every acceptance criterion");
        all_cmd->callback([&] {
            std::vector<selfcheck::CriterionResult> results = selfcheck::run_all();
            if (json_out) {
                bool all = true;
                json arr = json::array();
                for (const auto& r : results) {
                    arr.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
                    all = all && r.pass;
                }
                out << json{{"criteria", arr}, {"all_passed", all}}.dump(2) << '\n';
                if (!all) exit_code = kExitCheckFailed;
                return;
            }
            if (!selfcheck::report(out, results)) exit_code = kExitCheckFailed;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    } catch (const glho::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return exit_code;
}
