#include "oulad/mappings.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "oulad/errors.hpp"

namespace oulad {
namespace {

// Compiled-in defaults, byte-identical to the files under data/mappings/.

const std::string kFslm = R"(# source: Felder & Silverman (1988), Learning and Teaching Styles in Engineering Education; activity poles adapted to OULAD activity types
activity_type,category
homepage,unclassified
oucontent,reflective
forumng,active
resource,reflective
url,reflective
subpage,unclassified
glossary,sensing
oucollaborate,active
dataplus,sensing
quiz,active
ouelluminate,active
sharedsubpage,unclassified
questionnaire,active
page,reflective
externalquiz,active
ouwiki,active
dualpane,reflective
repeatactivity,sensing
folder,unclassified
htmlactivity,intuitive
)";

const std::string kFslsm = R"(# source: Felder & Silverman (1988) learning style model, dimension view (processing, perception, input, understanding)
activity_type,category
homepage,unclassified
oucontent,input
forumng,processing
resource,input
url,input
subpage,unclassified
glossary,perception
oucollaborate,processing
dataplus,perception
quiz,processing
ouelluminate,processing
sharedsubpage,unclassified
questionnaire,perception
page,input
externalquiz,processing
ouwiki,processing
dualpane,input
repeatactivity,understanding
folder,unclassified
htmlactivity,understanding
)";

const std::string kOls = R"(# source: Chi & Wylie (2014) ICAP framework, engagement modes applied to online learning activities
activity_type,category
homepage,passive
oucontent,passive
forumng,interactive
resource,passive
url,passive
subpage,passive
glossary,passive
oucollaborate,interactive
dataplus,constructive
quiz,active
ouelluminate,interactive
sharedsubpage,passive
questionnaire,active
page,passive
externalquiz,active
ouwiki,constructive
dualpane,passive
repeatactivity,active
folder,passive
htmlactivity,constructive
)";

const std::string kVark = R"(# source: Fleming & Mills (1992), VARK sensory modality preferences, adapted to OULAD activity types
activity_type,category
homepage,unclassified
oucontent,read_write
forumng,aural
resource,read_write
url,visual
subpage,unclassified
glossary,read_write
oucollaborate,aural
dataplus,kinesthetic
quiz,kinesthetic
ouelluminate,aural
sharedsubpage,unclassified
questionnaire,kinesthetic
page,read_write
externalquiz,kinesthetic
ouwiki,read_write
dualpane,visual
repeatactivity,kinesthetic
folder,unclassified
htmlactivity,kinesthetic
)";

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::optional<std::string> ActivityMapping::category_of(const std::string& activity_type) const {
    for (const auto& [type, category] : entries) {
        if (type == activity_type) return category;
    }
    return std::nullopt;
}

std::vector<std::string> ActivityMapping::categories() const {
    std::vector<std::string> out;
    for (const auto& [type, category] : entries) {
        if (std::find(out.begin(), out.end(), category) == out.end()) out.push_back(category);
    }
    return out;
}

const std::vector<std::string>& mapping_names() {
    static const std::vector<std::string> names = {"FSLM", "FSLSM", "OLS", "VARK"};
    return names;
}

ActivityMapping parse_mapping(const std::string& text, const std::string& name) {
    ActivityMapping mapping;
    mapping.name = name;

    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string tag = "# source:";
            if (line.compare(0, tag.size(), tag) == 0)
                mapping.source = trim(line.substr(tag.size()));
            continue;
        }
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ParseError(name, line_no, 1, "mapping line is not 'activity_type,category'");
        std::string left = trim(line.substr(0, comma));
        std::string right = trim(line.substr(comma + 1));
        if (!header_seen) {
            if (left != "activity_type" || right != "category")
                throw ParseError(name, line_no, 1,
                                 "mapping header must be 'activity_type,category'");
            header_seen = true;
            continue;
        }
        if (left.empty() || right.empty())
            throw ParseError(name, line_no, 1, "empty activity type or category");
        if (mapping.category_of(left))
            throw ParseError(name, line_no, 1, "duplicate activity type: " + left);
        mapping.entries.emplace_back(std::move(left), std::move(right));
    }
    if (!header_seen) throw ParseError(name, 1, 1, "mapping file has no header");
    return mapping;
}

const std::string& builtin_mapping_text(const std::string& name) {
    if (name == "FSLM") return kFslm;
    if (name == "FSLSM") return kFslsm;
    if (name == "OLS") return kOls;
    if (name == "VARK") return kVark;
    throw SpecError("unknown mapping '" + name + "' (expected FSLM, FSLSM, OLS, or VARK)");
}

ActivityMapping load_mapping(const std::string& name,
                             const std::optional<std::filesystem::path>& mapping_dir) {
    if (mapping_dir) {
        auto path = *mapping_dir / (lower(name) + ".csv");
        std::ifstream in(path, std::ios::binary);
        if (!in) throw AcquisitionError("cannot open mapping file: " + path.string());
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_mapping(buf.str(), name);
    }
    return parse_mapping(builtin_mapping_text(name), name);
}

}  // namespace oulad
