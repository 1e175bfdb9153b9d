#pragma once

#include <string>

namespace cvens {

// Canonical text form used for confounder matching and tag lookup:
// Unicode NFC, lowercased, runs of whitespace collapsed to one space, trimmed.
std::string normalize_text(const std::string& text);

}  // namespace cvens
