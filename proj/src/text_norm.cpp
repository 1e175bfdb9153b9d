#include "cvens/text_norm.hpp"

#include <boost/locale.hpp>

#include <cctype>

namespace cvens {

namespace {

const std::locale& utf8_locale() {
    static const std::locale loc = [] {
        boost::locale::generator gen;
        return gen("en_US.UTF-8");
    }();
    return loc;
}

}  // namespace

std::string normalize_text(const std::string& text) {
    std::string s = boost::locale::normalize(text, boost::locale::norm_nfc, utf8_locale());
    s = boost::locale::to_lower(s, utf8_locale());

    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    for (unsigned char c : s) {
        if (std::isspace(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(static_cast<char>(c));
    }
    return out;
}

}  // namespace cvens
