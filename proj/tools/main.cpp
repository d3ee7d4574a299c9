#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <ccset/ccset.hpp>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
}

ccset::CodeSetDocument load_document(const std::string& ref) {
    if (ref == "example1")
        return ccset::parse_sign_document(std::string(ccset::fixtures::example1_seed_text));
    return ccset::parse_document(read_file(ref));
}

// "dft" and "hadamard" build the standard families; "example1" is the
// bundled (-,-)/(+,-) pair; anything else is read as a JSON file
// {"root_order": q, "sequences": [[phases], ...]}.
ccset::MosFamily resolve_mos(const std::string& spec, int p) {
    if (spec == "dft") return ccset::mos_dft(p);
    if (spec == "hadamard") return ccset::mos_hadamard(p);
    if (spec == "example1") {
        if (p != 2) throw std::invalid_argument("--mos example1 is a family of 2 sequences; use --p 2");
        return ccset::fixtures::example1_mos();
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(spec));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("sequence file is not valid JSON: ") + e.what());
    }
    try {
        const int q = j.at("root_order").get<int>();
        std::vector<ccset::Sequence> rows;
        for (const auto& row : j.at("sequences"))
            rows.emplace_back(ccset::PhaseAlphabet{q}, row.get<std::vector<int>>());
        ccset::MosFamily fam{std::move(rows)};
        if (fam.size() != p) throw std::invalid_argument("sequence family size does not match --p");
        return fam;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed sequence file: ") + e.what());
    }
}

// One permutation as 1-based values, e.g. "2,1,4,3" or "2 1 4 3".
std::vector<int> parse_one_perm(const std::string& text) {
    std::vector<int> perm;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::istringstream fields(token);
        int value = 0;
        while (fields >> value) perm.push_back(value - 1);
        if (!fields.eof()) throw std::invalid_argument("permutation entries must be integers");
    }
    if (perm.empty()) throw std::invalid_argument("empty permutation spec");
    return perm;
}

std::vector<std::vector<int>> parse_perm_list(const std::string& text, char separator) {
    std::vector<std::vector<int>> perms;
    std::string chunk;
    std::istringstream in(text);
    while (std::getline(in, chunk, separator)) {
        if (chunk.find_first_not_of(" \t\r") == std::string::npos) continue;
        perms.push_back(parse_one_perm(chunk));
    }
    if (perms.empty()) throw std::invalid_argument("empty permutation spec");
    return perms;
}

bool looks_inline(const std::string& spec) {
    return spec.find_first_not_of("0123456789,; \t") == std::string::npos;
}

// "default" is the cyclic-shift family, "example1" the bundled pair
// (1,2,3,4)/(2,1,4,3); otherwise an inline "1,2,3,4;2,1,4,3" list or a
// file with one 1-based permutation per line.
ccset::PermutationFamily resolve_perms(const std::string& spec, int m, int p) {
    if (spec == "default") return ccset::default_permutation_family(m, p);
    if (spec == "example1") return ccset::fixtures::example1_perms();
    const auto perms = looks_inline(spec) ? parse_perm_list(spec, ';') : parse_perm_list(read_file(spec), '\n');
    return ccset::PermutationFamily(perms);
}

std::vector<int> resolve_single_perm(const std::string& spec, int m) {
    if (spec == "default") {
        std::vector<int> identity(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) identity[static_cast<std::size_t>(i)] = i;
        return identity;
    }
    if (spec == "example1") return ccset::fixtures::example1_perms().perm(0);
    const auto perms = looks_inline(spec) ? parse_perm_list(spec, ';') : parse_perm_list(read_file(spec), '\n');
    return perms.front();
}

struct GenOptions {
    std::string construction;
    int m = 0;
    long long s = 0;
    long long x = 0;
    int p = 0;
    std::string seed;
    std::string mos = "dft";
    std::string perms = "default";
    std::string out;
    std::string format = "json";
    bool m_given = false, s_given = false;
};

int run_gen(const GenOptions& opt) {
    ccset::CodeSetDocument doc;
    std::vector<ccset::Verdict> verdicts;
    ccset::Provenance provenance;
    provenance.construction = opt.construction;

    if (opt.construction == "perfect" || opt.construction == "ccc-mult") {
        if (!opt.m_given || !opt.s_given)
            throw std::invalid_argument("gen " + opt.construction + " needs --m and --s");
        const ccset::MultMatrixParams params{opt.m, opt.s, opt.x};
        provenance.parameters = {{"m", opt.m}, {"s", opt.s}, {"x", opt.x}};
        if (opt.construction == "perfect") {
            const ccset::Code code = ccset::multiplication_matrix(params);
            doc = ccset::document_from_code(code);
            verdicts.push_back(ccset::verify_perfect_array(code));
        } else {
            const ccset::CodeSet set = ccset::mult_matrix_ccc(params);
            doc = ccset::document_from_set(set);
            verdicts.push_back(ccset::verify_ccc(set));
        }
    } else {
        if (opt.seed.empty()) throw std::invalid_argument("gen " + opt.construction + " needs --seed");
        if (opt.p < 1) throw std::invalid_argument("gen " + opt.construction + " needs --p");
        const ccset::CodeSet seed = load_document(opt.seed).as_set();
        const ccset::MosFamily mos = resolve_mos(opt.mos, opt.p);
        provenance.parameters = {{"seed", opt.seed}, {"p", opt.p}, {"mos", opt.mos}, {"perms", opt.perms}};
        if (opt.construction == "extend") {
            const ccset::CodeSet out =
                ccset::extend_ccc(seed, opt.p, mos, resolve_single_perm(opt.perms, seed.size()));
            doc = ccset::document_from_set(out);
            verdicts.push_back(ccset::verify_ccc(out));
        } else {  // szccs
            const ccset::SzccsBundle bundle =
                ccset::build_mccc_szccs(seed, opt.p, mos, resolve_perms(opt.perms, seed.size(), opt.p));
            doc = ccset::document_from_bundle(bundle);
            verdicts.push_back(ccset::verify_szccs(bundle.flattened(), bundle.zone.z));
            if (bundle.sets.size() > 1)
                verdicts.push_back(ccset::verify_mccc(bundle.sets, seed.cols()));
        }
    }

    doc.provenance = provenance;
    bool all_passed = true;
    for (const ccset::Verdict& v : verdicts) {
        doc.verdicts.push_back(ccset::verdict_to_json(v));
        all_passed = all_passed && v.passed;
    }
    if (!all_passed) {
        std::cerr << "error: construction output failed verification:\n";
        for (const ccset::Verdict& v : verdicts)
            if (!v.passed) std::cerr << ccset::verdict_to_json(v).dump(2) << "\n";
        return 3;
    }
    write_output(opt.format == "txt" ? ccset::emit_sign_document(doc) : ccset::emit_document(doc),
                 opt.out);
    return 0;
}

struct VerifyOptions {
    std::string file;
    std::string property;
    int z = -1;
    bool z_given = false;
};

int run_verify(const VerifyOptions& opt) {
    const ccset::CodeSetDocument doc = load_document(opt.file);
    ccset::Verdict verdict;
    if (opt.property == "perfect" || opt.property == "gcs") {
        if (doc.k() != 1)
            throw std::invalid_argument("property '" + opt.property + "' applies to a single code");
        verdict = opt.property == "perfect" ? ccset::verify_perfect_array(doc.codes[0])
                                            : ccset::verify_gcs(doc.codes[0]);
    } else if (opt.property == "ccc") {
        verdict = ccset::verify_ccc(doc.as_set());
    } else if (opt.property == "szccs") {
        int z = opt.z;
        if (!opt.z_given) {
            if (!doc.zone) throw std::invalid_argument("verify szccs needs --z (document carries no zone)");
            z = *doc.zone;
        }
        verdict = ccset::verify_szccs(doc.as_set(), z);
    } else {  // mccc
        if (doc.sets < 2)
            throw std::invalid_argument("verify mccc needs a bundle document with at least two sets");
        const int z = opt.z_given ? opt.z : doc.n() / doc.sets;
        verdict = ccset::verify_mccc(doc.as_sets(), z);
    }
    std::cout << ccset::verdict_to_json(verdict).dump(2) << "\n";
    return verdict.passed ? 0 : 1;
}

struct CorrOptions {
    std::string file_a;
    std::string file_b;
    std::string mode;
    int a_index = 0;
    int b_index = 0;
    std::string out;
};

int run_corr(const CorrOptions& opt) {
    const ccset::CodeSetDocument doc_a = load_document(opt.file_a);
    if (opt.a_index < 0 || opt.a_index >= doc_a.k())
        throw std::invalid_argument("--a-index out of range");
    const ccset::Code& a = doc_a.codes[static_cast<std::size_t>(opt.a_index)];
    std::string csv;
    if (opt.mode == "pacf") {
        csv = ccset::pacf_csv(ccset::pacf2d(a));
    } else {
        const ccset::CodeSetDocument doc_b = opt.file_b.empty() ? doc_a : load_document(opt.file_b);
        if (opt.b_index < 0 || opt.b_index >= doc_b.k())
            throw std::invalid_argument("--b-index out of range");
        csv = ccset::accf_csv(ccset::accf_vector(a, doc_b.codes[static_cast<std::size_t>(opt.b_index)]));
    }
    write_output(csv, opt.out);
    return 0;
}

int run_info(const std::string& file) {
    const ccset::CodeSetDocument doc = load_document(file);
    std::cout << "kind: " << doc.kind << "\n"
              << "codes: " << doc.k() << " of size " << doc.m() << " x " << doc.n() << "\n"
              << "root order: " << doc.root_order() << "\n";
    if (doc.kind == "szccs_bundle") {
        std::cout << "sets: " << doc.sets;
        if (doc.zone) std::cout << " (symmetric zone Z = " << *doc.zone << ")";
        std::cout << "\n";
    }
    if (doc.provenance)
        std::cout << "provenance: " << doc.provenance->construction << " "
                  << doc.provenance->parameters.dump() << "\n";
    for (const auto& v : doc.verdicts)
        std::cout << "embedded verdict: " << v.value("property", std::string("?")) << " "
                  << (v.value("passed", false) ? "passed" : "FAILED") << "\n";
    if (doc.k() >= 2)
        std::cout << "measured symmetric zone: " << ccset::measure_symmetric_zone(doc.as_set()) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact construction and exhaustive verification of perfect arrays,\n"
                 "complete complementary codes, and symmetrical ZCCS bundles."};
    app.set_version_flag("--version", "ccset 0.1.0");
    app.require_subcommand(1);

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "Generate a code document (verified before writing)");
    gen->add_option("construction", gen_opt.construction, "perfect | ccc-mult | extend | szccs")
        ->required()
        ->check(CLI::IsMember({"perfect", "ccc-mult", "extend", "szccs"}));
    gen->add_option("--m", gen_opt.m, "matrix order M (perfect, ccc-mult)");
    gen->add_option("--s", gen_opt.s, "phase factor s, coprime to M (perfect, ccc-mult)");
    gen->add_option("--x", gen_opt.x, "constant phase offset x (perfect, ccc-mult)");
    gen->add_option("--p", gen_opt.p, "block width P (extend, szccs)");
    gen->add_option("--seed", gen_opt.seed, "seed CCC document path, or 'example1'");
    gen->add_option("--mos", gen_opt.mos, "dft | hadamard | example1 | JSON file path");
    gen->add_option("--perms", gen_opt.perms,
                    "default | example1 | inline '1,2,3,4;2,1,4,3' (1-based) | file path");
    gen->add_option("--out", gen_opt.out, "write to file instead of stdout");
    gen->add_option("--format", gen_opt.format, "json | txt (txt is binary-alphabet only)")
        ->check(CLI::IsMember({"json", "txt"}));

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "Verify a document against a property");
    verify->add_option("file", verify_opt.file, "document path, or 'example1'")->required();
    verify->add_option("--property", verify_opt.property, "perfect | gcs | ccc | szccs | mccc")
        ->required()
        ->check(CLI::IsMember({"perfect", "gcs", "ccc", "szccs", "mccc"}));
    auto* zopt = verify->add_option("--z", verify_opt.z, "zone width (szccs, mccc)");

    CorrOptions corr_opt;
    auto* corr = app.add_subcommand("corr", "Emit an exhaustive correlation table as CSV");
    corr->add_option("file_a", corr_opt.file_a, "document path, or 'example1'")->required();
    corr->add_option("file_b", corr_opt.file_b, "second document (accf; defaults to file_a)");
    corr->add_option("--mode", corr_opt.mode, "pacf | accf")
        ->required()
        ->check(CLI::IsMember({"pacf", "accf"}));
    corr->add_option("--a-index", corr_opt.a_index, "code index within file_a");
    corr->add_option("--b-index", corr_opt.b_index, "code index within file_b");
    corr->add_option("--out", corr_opt.out, "write to file instead of stdout");

    std::string info_file;
    auto* info = app.add_subcommand("info", "Summarize a document");
    info->add_option("file", info_file, "document path, or 'example1'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    gen_opt.m_given = gen->count("--m") > 0;
    gen_opt.s_given = gen->count("--s") > 0;
    verify_opt.z_given = zopt->count() > 0;

    try {
        if (gen->parsed()) return run_gen(gen_opt);
        if (verify->parsed()) return run_verify(verify_opt);
        if (corr->parsed()) return run_corr(corr_opt);
        return run_info(info_file);
    } catch (const ccset::verification_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
