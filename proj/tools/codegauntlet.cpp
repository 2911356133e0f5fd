#include <sys/file.h>
#include <unistd.h>

#include <fcntl.h>

#include <filesystem>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "codegauntlet/atomic_file.hpp"
#include "codegauntlet/config.hpp"
#include "codegauntlet/error.hpp"
#include "codegauntlet/generation.hpp"
#include "codegauntlet/ingest.hpp"
#include "codegauntlet/judging.hpp"
#include "codegauntlet/metrics.hpp"
#include "codegauntlet/reporting.hpp"
#include "codegauntlet/stores.hpp"

namespace fs = std::filesystem;

namespace {

// Exit-code contract, stable and documented in the README.
constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitResumable = 3;
constexpr int kExitBackend = 4;

// Best-effort advisory lock: two pipelines on one store directory is
// unsupported, and this catches the honest mistakes.
class StoreLock {
  public:
    explicit StoreLock(const fs::path& store_dir) {
        fs::create_directories(store_dir);
        path_ = store_dir / ".codegauntlet.lock";
        fd_ = ::open(path_.c_str(), O_CREAT | O_RDWR, 0644);
        if (fd_ < 0) throw cg::ConfigError("cannot open lock file '" + path_.string() + "'");
        if (::flock(fd_, LOCK_EX | LOCK_NB) != 0) {
            ::close(fd_);
            fd_ = -1;
            throw cg::ConfigError("store '" + store_dir.string() +
                                  "' is locked by another pipeline instance");
        }
    }
    ~StoreLock() {
        if (fd_ >= 0) {
            ::flock(fd_, LOCK_UN);
            ::close(fd_);
        }
    }

  private:
    fs::path path_;
    int fd_ = -1;
};

cg::PromptTemplate load_template(const cg::RunConfig& cfg) {
    if (cfg.prompt_template_path.empty()) return cg::default_prompt_template();
    auto text = cg::read_file(cfg.prompt_template_path);
    if (!text)
        throw cg::ConfigError("prompt template '" + cfg.prompt_template_path.string() + "' not found");
    return cg::PromptTemplate{*text};
}

std::vector<std::string> selected_models(const cg::RunConfig& cfg, const std::string& model_flag,
                                         bool all_models) {
    if (all_models) {
        std::vector<std::string> names;
        for (const auto& m : cfg.models) names.push_back(m.model_name);
        return names;
    }
    if (model_flag.empty())
        throw cg::ConfigError("pass --model <name> or --all-models");
    if (!cfg.find_model(model_flag))
        throw cg::ConfigError("unknown model \"" + model_flag + "\" (not in config)");
    return {model_flag};
}

void print_summary(const std::string& what, const std::string& model, const cg::PassSummary& s) {
    std::cout << what << " [" << model << "]: succeeded " << s.succeeded << ", failed " << s.failed
              << ", skipped " << s.skipped << " (total " << s.total() << ")\n";
}

int cmd_ingest(const std::string& input, const std::string& output) {
    const cg::ProblemCorpus corpus = cg::run_ingest(input, output);
    cg::DifficultyTiering tiering;  // defaults; ingest is config-independent
    std::map<cg::Tier, std::size_t> tiers;
    for (const auto& p : corpus.problems) ++tiers[cg::tier_of(p.difficulty, tiering)];
    std::cout << "wrote " << output << ": " << corpus.problems.size() << " problems (Easy "
              << tiers[cg::Tier::Easy] << ", Medium " << tiers[cg::Tier::Medium] << ", Hard "
              << tiers[cg::Tier::Hard] << " at default tiering " << tiering.easy_upper << "/"
              << tiering.medium_upper << ")\n";
    return kExitOk;
}

int cmd_generate(const cg::RunConfig& cfg, const std::string& model_flag, bool all_models) {
    cfg.validate();
    const auto corpus = cg::load_corpus(cfg.corpus_path);
    const auto tmpl = load_template(cfg);
    StoreLock lock(cfg.store_dir);
    cg::SystemTimeSource time_source;

    for (const auto& name : selected_models(cfg, model_flag, all_models)) {
        cg::HttpRuntimeClient client(*cfg.find_model(name), &time_source);
        const auto summary =
            cg::run_generation_pass(corpus, name, client, tmpl, cfg.store_dir, time_source);
        print_summary("generate", name, summary);
    }
    return kExitOk;
}

int cmd_submit(const cg::RunConfig& cfg, const std::string& model_flag, bool all_models,
               const std::string& backend_override) {
    cg::RunConfig effective = cfg;
    if (backend_override == "local") effective.judge.backend = cg::JudgeBackendKind::Local;
    else if (backend_override == "remote") effective.judge.backend = cg::JudgeBackendKind::Remote;
    else if (!backend_override.empty())
        throw cg::ConfigError("--backend must be local or remote");
    effective.validate();

    const auto corpus = cg::load_corpus(effective.corpus_path);
    StoreLock lock(effective.store_dir);
    cg::SystemTimeSource time_source;

    for (const auto& name : selected_models(effective, model_flag, all_models)) {
        auto backend = cg::make_verdict_backend(effective.judge, &time_source);
        const auto summary =
            cg::run_submission_pass(corpus, name, *backend, effective.store_dir, time_source);
        print_summary("submit", name, summary);

        const auto store = cg::load_submissions(effective.store_dir, name);
        std::map<cg::VerdictCategory, std::uint64_t> counts;
        for (const auto& [_, rec] : store.entries) ++counts[rec.verdict.category];
        std::cout << "  verdicts:";
        for (const auto& [cat, n] : counts) std::cout << " " << cg::to_string(cat) << "=" << n;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_report(const cg::RunConfig& cfg) {
    cfg.validate();
    const auto corpus = cg::load_corpus(cfg.corpus_path);

    cg::ReportInputs inputs;
    inputs.corpus_size = corpus.problems.size();
    inputs.tiering = cfg.tiering;
    inputs.histogram_bins = cfg.histogram_bins;
    inputs.judge_label = cfg.judge.backend == cg::JudgeBackendKind::Local
                             ? "sample-judged (local)"
                             : "remote-judged";
    if (!cfg.reference_baselines_path.empty())
        inputs.reference_baselines = cg::load_reference_baselines(cfg.reference_baselines_path);

    std::vector<cg::SubmissionsFile> submission_stores;
    for (const auto& m : cfg.models) {
        if (cg::solutions_exist(cfg.store_dir, m.model_name)) {
            const auto sols = cg::load_solutions(cfg.store_dir, m.model_name);
            cg::ModelTimes mt{m.model_name, {}};
            for (const auto& [_, rec] : sols.entries)
                if (!rec.failed()) mt.generation_times_s.push_back(rec.generation_time_s);
            inputs.times.push_back(std::move(mt));
        }
        if (fs::exists(cg::submissions_path(cfg.store_dir, m.model_name)))
            submission_stores.push_back(cg::load_submissions(cfg.store_dir, m.model_name));
    }
    if (inputs.times.empty() && submission_stores.empty())
        throw cg::ConfigError("nothing to report: no solutions or submissions stores under '" +
                              cfg.store_dir.string() + "'");

    inputs.outcomes = cg::outcome_tables(cg::join_submissions(corpus, cfg.tiering, submission_stores));
    inputs.acceptance = cg::acceptance_table(inputs.outcomes);

    cg::SystemTimeSource time_source;
    const auto bundle = cg::render_reports(inputs, time_source);
    const auto out_dir = cfg.report_dir / cfg.run_id;
    const auto written = cg::write_report_bundle(bundle, out_dir);

    std::cout << "report bundle at " << out_dir.string() << " (" << written.size()
              << " file(s) updated, " << bundle.files.size() + 1 << " total)\n";
    for (const auto& w : bundle.warnings) std::cout << "  warning: " << w << "\n";
    return kExitOk;
}

int cmd_status(const cg::RunConfig& cfg) {
    cfg.validate();
    const auto corpus = cg::load_corpus(cfg.corpus_path);
    const std::size_t total = corpus.problems.size();
    std::cout << "corpus: " << cfg.corpus_path.string() << " (" << total << " problems)\n";

    for (const auto& m : cfg.models) {
        for (const auto kind : {cg::PassKind::Generation, cg::PassKind::Submission}) {
            const auto cp = cg::read_checkpoint(cfg.store_dir, kind, m.model_name);
            std::cout << "  " << m.model_name << " " << cg::to_string(kind) << ": ";
            if (!cp) {
                std::cout << "not started";
            } else {
                std::cout << cp->processed_count << "/" << total << " done, last id \""
                          << cp->last_processed_id << "\", remaining "
                          << (total >= cp->processed_count ? total - cp->processed_count : 0);
            }
            const std::size_t records =
                kind == cg::PassKind::Generation
                    ? cg::load_solutions(cfg.store_dir, m.model_name).entries.size()
                    : cg::load_submissions(cfg.store_dir, m.model_name).entries.size();
            std::cout << "; store records " << records << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Benchmark locally hosted code LLMs on a problem corpus: generate solutions, "
                 "judge them, and report pass@1 and timing analyses"};
    app.require_subcommand(1);

    std::string config_flag;
    app.add_option("--config", config_flag, "Config file (default: $CODEGAUNTLET_CONFIG)");

    auto* ingest = app.add_subcommand("ingest", "Build the consolidated corpus file");
    std::string ingest_input, ingest_output;
    ingest->add_option("input", ingest_input, "Corpus JSON or directory tree")->required();
    ingest->add_option("output", ingest_output, "Destination corpus JSON")->required();

    auto* generate = app.add_subcommand("generate", "Run the generation pass for a model");
    std::string gen_model;
    bool gen_all = false;
    generate->add_option("--model", gen_model, "Model name from the config");
    generate->add_flag("--all-models", gen_all, "Run every configured model sequentially");

    auto* submit = app.add_subcommand("submit", "Judge generated solutions");
    std::string sub_model, sub_backend;
    bool sub_all = false;
    submit->add_option("--model", sub_model, "Model name from the config");
    submit->add_flag("--all-models", sub_all, "Run every configured model sequentially");
    submit->add_option("--backend", sub_backend, "Override judge backend: local|remote");

    auto* report = app.add_subcommand("report", "Render the report bundle");
    auto* status = app.add_subcommand("status", "Show checkpoints and store completeness");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ingest->parsed()) return cmd_ingest(ingest_input, ingest_output);

        const auto cfg = cg::load_run_config(cg::resolve_config_path(config_flag));
        if (generate->parsed()) return cmd_generate(cfg, gen_model, gen_all);
        if (submit->parsed()) return cmd_submit(cfg, sub_model, sub_all, sub_backend);
        if (report->parsed()) return cmd_report(cfg);
        if (status->parsed()) return cmd_status(cfg);
    } catch (const cg::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const cg::BackendError& e) {
        std::cerr << "backend failure (rerun to resume): " << e.what() << "\n";
        return kExitBackend;
    } catch (const cg::Error& e) {
        std::cerr << "error (rerun to resume): " << e.what() << "\n";
        return kExitResumable;
    }
    return kExitOk;
}
