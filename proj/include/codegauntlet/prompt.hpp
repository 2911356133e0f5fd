#ifndef CODEGAUNTLET_PROMPT_HPP
#define CODEGAUNTLET_PROMPT_HPP

#include <string>

#include "codegauntlet/corpus.hpp"

namespace cg {

// Prompt text with {statement}, {samples} and {language} placeholders.
// Rendering substitutes every occurrence of the known placeholders; any
// other {lowercase_word} token is a configuration error. Braces that do not
// form such a token pass through untouched, so statements containing code
// are safe.
struct PromptTemplate {
    std::string text;
};

// The built-in template. Its wording is this artifact's choice (tuned to the
// judge's stdin/stdout convention), not a published prompt.
PromptTemplate default_prompt_template();

// Sample pairs serialized as "Input:\n...\nOutput:\n..." blocks, in corpus
// order, separated by blank lines. Empty samples render as an empty string.
std::string render_samples(const Problem& problem);

// Deterministic render. Throws ConfigError on unknown placeholders.
std::string build_prompt(const Problem& problem, const PromptTemplate& tmpl);

}  // namespace cg

#endif
