// Standalone scripted judge for demos and manual pipeline runs.
// Script file: {"token": str, "statuses": {"<problem_id>": ["Running", "Accepted", ...]}}.
#include <csignal>
#include <iostream>

#include "CLI11.hpp"
#include "codegauntlet/atomic_file.hpp"
#include "codegauntlet/mock_judge_server.hpp"
#include "json.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Scripted mock judge (POST /submit, GET /status/<ref>)"};
    std::string script_path;
    std::string token = "test-token";
    app.add_option("--script", script_path, "JSON script file");
    app.add_option("--token", token, "Bearer token submissions must carry");
    CLI11_PARSE(app, argc, argv);

    if (!script_path.empty()) {
        auto text = cg::read_file(script_path);
        if (!text) {
            std::cerr << "script file not found: " << script_path << "\n";
            return 2;
        }
        auto doc = nlohmann::json::parse(*text, nullptr, false);
        if (doc.is_discarded()) {
            std::cerr << "malformed script file\n";
            return 2;
        }
        if (doc.contains("token")) token = doc["token"].get<std::string>();
        cg::MockJudgeServer server(token);
        for (const auto& [problem, statuses] : doc.value("statuses", nlohmann::json::object()).items())
            server.script_statuses(problem, statuses.get<std::vector<std::string>>());
        const std::string url = server.start();
        std::cout << "mock judge listening at " << url << " (token: " << token << ")\n";
        ::pause();
        return 0;
    }

    cg::MockJudgeServer server(token);
    const std::string url = server.start();
    std::cout << "mock judge listening at " << url << " (token: " << token << ")\n";
    std::cout << "unscripted problems are Accepted immediately\n";
    ::pause();
    return 0;
}
