#include "codegauntlet/prompt.hpp"

#include <cctype>

#include "codegauntlet/error.hpp"

namespace cg {

PromptTemplate default_prompt_template() {
    return PromptTemplate{
        "You are solving a competitive programming problem.\n"
        "Write a complete {language} program that reads from standard input and writes to standard output.\n"
        "Output only the final program in a single fenced code block and nothing else.\n"
        "\n"
        "Problem statement:\n"
        "{statement}\n"
        "\n"
        "Sample tests:\n"
        "{samples}\n"};
}

std::string render_samples(const Problem& problem) {
    std::string out;
    for (std::size_t i = 0; i < problem.samples.size(); ++i) {
        if (i > 0) out += "\n\n";
        out += "Input:\n";
        out += problem.samples[i].input;
        out += "\nOutput:\n";
        out += problem.samples[i].expected_output;
    }
    return out;
}

std::string build_prompt(const Problem& problem, const PromptTemplate& tmpl) {
    const std::string& t = tmpl.text;
    std::string out;
    out.reserve(t.size() + problem.statement.size());

    for (std::size_t i = 0; i < t.size();) {
        if (t[i] != '{') {
            out.push_back(t[i++]);
            continue;
        }
        // Candidate placeholder: '{' + [a-z_]+ + '}'.
        std::size_t j = i + 1;
        while (j < t.size() && (std::islower(static_cast<unsigned char>(t[j])) || t[j] == '_')) ++j;
        if (j >= t.size() || t[j] != '}' || j == i + 1) {
            out.push_back(t[i++]);  // not a placeholder token
            continue;
        }
        const std::string name = t.substr(i + 1, j - i - 1);
        if (name == "statement") out += problem.statement;
        else if (name == "samples") out += render_samples(problem);
        else if (name == "language") out += problem.submission_language;
        else throw ConfigError("prompt template uses unknown placeholder {" + name + "}");
        i = j + 1;
    }
    return out;
}

}  // namespace cg
