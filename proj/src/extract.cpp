#include "codegauntlet/extract.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

namespace cg {

namespace {

std::string trimmed(std::string s) {
    auto notspace = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
    s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
    return s;
}

std::string lowered(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

struct FencedBlock {
    std::string label;       // info string, trimmed, original case
    std::size_t begin = 0;   // content slice [begin, end) in the response
    std::size_t end = 0;
};

// Fences follow the CommonMark shape: an opening line starting with ```
// carries the label; the closing line is ``` alone (a labeled ```lang line
// inside a block is content, not a close).
std::vector<FencedBlock> find_blocks(const std::string& text) {
    std::vector<FencedBlock> blocks;
    std::optional<FencedBlock> open;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::size_t line_end = (eol == std::string::npos) ? text.size() : eol;
        const std::string line = text.substr(pos, line_end - pos);
        const bool is_fence = line.rfind("```", 0) == 0;
        const std::string rest = is_fence ? trimmed(line.substr(3)) : std::string();

        if (!open && is_fence) {
            open = FencedBlock{rest, (eol == std::string::npos) ? text.size() : eol + 1, 0};
        } else if (open && is_fence && rest.empty()) {
            // Drop the newline that precedes the closing fence.
            open->end = (pos > open->begin) ? pos - 1 : open->begin;
            blocks.push_back(*open);
            open.reset();
        }
        if (eol == std::string::npos) break;
        pos = eol + 1;
    }
    if (open) {  // unclosed fence: content runs to the end
        open->end = text.size();
        blocks.push_back(*open);
    }
    return blocks;
}

}  // namespace

std::string extract_code(const std::string& raw_response, const std::string& language_tag) {
    const auto blocks = find_blocks(raw_response);
    if (blocks.empty()) return raw_response;

    const std::string want = lowered(trimmed(language_tag));
    if (!want.empty()) {
        for (const auto& b : blocks)
            if (lowered(b.label) == want) return raw_response.substr(b.begin, b.end - b.begin);
    }
    const auto& b = blocks.front();
    return raw_response.substr(b.begin, b.end - b.begin);
}

}  // namespace cg
