#include "workbench/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace workbench {

std::string serialize_family(const Family& fam) {
    std::ostringstream out;
    out << "n=" << fam.ground_n() << " k=";
    if (fam.uniformity())
        out << *fam.uniformity();
    else
        out << "-";
    out << "\n";
    for (const SetWord& w : fam.members()) {
        if (w.is_empty()) {
            out << "-\n";
            continue;
        }
        bool first = true;
        for (int e : w.elements()) {
            if (!first) out << ' ';
            out << e;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

Family parse_family(std::istream& in) {
    std::string line;
    int ground_n = -1;
    std::optional<int> uniformity;
    bool header_seen = false;
    std::vector<SetWord> members;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank line
        if (!header_seen) {
            if (tok.rfind("n=", 0) != 0) throw std::invalid_argument("family format: expected header `n=<int> k=<int|->`");
            ground_n = std::stoi(tok.substr(2));
            std::string ktok;
            if (!(ls >> ktok) || ktok.rfind("k=", 0) != 0)
                throw std::invalid_argument("family format: expected `k=<int|->` in header");
            if (ktok.substr(2) != "-") uniformity = std::stoi(ktok.substr(2));
            header_seen = true;
            continue;
        }
        SetWord w;
        if (tok == "-") {
            members.push_back(w);
            continue;
        }
        ls.clear();
        ls.str(line);
        int e;
        while (ls >> e) {
            if (e < 0 || e >= ground_n) throw std::invalid_argument("family format: element outside [0,n)");
            w.set(e);
        }
        if (ls.fail() && !ls.eof()) throw std::invalid_argument("family format: bad element token");
        members.push_back(w);
    }
    if (!header_seen) throw std::invalid_argument("family format: missing header line");
    return Family(ground_n, std::move(members), uniformity);
}

Family parse_family_string(const std::string& text) {
    std::istringstream in(text);
    return parse_family(in);
}

Family load_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open family file: " + path);
    return parse_family(in);
}

void save_family_file(const Family& fam, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write family file: " + path);
    out << serialize_family(fam);
}

}  // namespace workbench
