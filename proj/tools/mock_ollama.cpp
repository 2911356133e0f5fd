// Standalone scripted LLM runtime for demos and manual pipeline runs.
// Script file: {"default_response": str, "entries": [{"key", "response", "delay_s"}]}.
#include <csignal>
#include <iostream>

#include "CLI11.hpp"
#include "codegauntlet/atomic_file.hpp"
#include "codegauntlet/mock_llm_server.hpp"
#include "json.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Scripted mock LLM runtime (serves POST /api/generate)"};
    std::string script_path;
    int port = 11434;
    app.add_option("--script", script_path, "JSON script file");
    app.add_option("--port", port, "Port hint (informational; an ephemeral port is used when busy)");
    CLI11_PARSE(app, argc, argv);

    cg::MockLlmServer server;
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
        if (doc.contains("default_response"))
            server.set_default_response(doc["default_response"].get<std::string>());
        for (const auto& e : doc.value("entries", nlohmann::json::array())) {
            server.script(e.at("key").get<std::string>(),
                          {e.at("response").get<std::string>(), e.value("delay_s", 0.0)});
        }
    }

    const std::string url = server.start();
    std::cout << "mock LLM runtime listening at " << url << "\n";
    std::cout << "point a model's base_url here and run the generate pass\n";

    ::pause();
    return 0;
}
