#include "whc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace whc {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

Face face_from_tokens(const std::vector<std::string>& toks, std::size_t begin,
                      const std::string& where) {
    Face f;
    for (std::size_t i = begin; i < toks.size(); ++i) {
        try {
            std::size_t used = 0;
            int v = std::stoi(toks[i], &used);
            if (used != toks[i].size()) throw std::invalid_argument(toks[i]);
            f.push_back(v);
        } catch (const std::exception&) {
            throw IoError(where + ": bad vertex id '" + toks[i] + "'");
        }
    }
    std::sort(f.begin(), f.end());
    if (!is_valid_face(f)) throw IoError(where + ": invalid face");
    return f;
}

EdgePath path_from_text(const std::string& body, const std::string& where) {
    EdgePath path;
    std::string chunk;
    std::istringstream in(body);
    while (std::getline(in, chunk, ',')) {
        auto toks = split_ws(chunk);
        if (toks.size() != 2) throw IoError(where + ": each path edge needs two vertices");
        try {
            path.emplace_back(std::stoi(toks[0]), std::stoi(toks[1]));
        } catch (const std::exception&) {
            throw IoError(where + ": bad vertex id in path");
        }
    }
    if (path.empty()) throw IoError(where + ": empty path");
    return path;
}

}  // namespace

LabeledComplex parse_complex_text(const std::string& text) {
    LabeledComplex lc;
    std::vector<Face> tops;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        const std::string where = "line " + std::to_string(lineno);
        if (line.rfind("@label", 0) == 0) {
            auto toks = split_ws(line);
            if (toks.size() < 3) throw IoError(where + ": @label needs a name and vertices");
            lc.face_labels[toks[1]] = face_from_tokens(toks, 2, where);
        } else if (line.rfind("@path", 0) == 0) {
            auto toks = split_ws(line);
            if (toks.size() < 2) throw IoError(where + ": @path needs a name");
            std::string body = trim(line.substr(line.find(toks[1]) + toks[1].size()));
            lc.path_labels[toks[1]] = path_from_text(body, where);
        } else if (line[0] == '@') {
            throw IoError(where + ": unknown directive");
        } else {
            tops.push_back(face_from_tokens(split_ws(line), 0, where));
        }
    }
    if (tops.empty()) throw IoError("no faces in complex text");
    lc.complex = SimplicialComplex::close_downward(tops);
    lc.check();
    return lc;
}

std::string serialize_complex(const LabeledComplex& lc) {
    std::ostringstream out;
    for (const Face& f : lc.complex.maximal_faces()) out << face_to_string(f) << '\n';
    for (const auto& [name, f] : lc.face_labels)
        out << "@label " << name << ' ' << face_to_string(f) << '\n';
    for (const auto& [name, p] : lc.path_labels) {
        out << "@path " << name << ' ';
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out << ", ";
            out << p[i].first << ' ' << p[i].second;
        }
        out << '\n';
    }
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);
    out << text;
    if (!out) throw IoError("short write: " + path);
}

LabeledComplex load_complex_file(const std::string& path) {
    try {
        return parse_complex_text(read_text_file(path));
    } catch (const std::invalid_argument& e) {
        throw IoError(path + ": " + e.what());
    }
}

void save_complex_file(const std::string& path, const LabeledComplex& lc) {
    write_text_file(path, serialize_complex(lc));
}

CertificateFile parse_certificate_text(const std::string& text) {
    CertificateFile cf;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool in_target = false;
    std::vector<Face> target_tops;
    bool have_header = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        const std::string where = "line " + std::to_string(lineno);
        if (line.rfind("@complex", 0) == 0) {
            cf.complex_ref = trim(line.substr(8));
            if (cf.complex_ref.empty()) throw IoError(where + ": @complex needs a file name");
            have_header = true;
        } else if (line == "@target") {
            in_target = true;
        } else if (in_target) {
            target_tops.push_back(face_from_tokens(split_ws(line), 0, where));
        } else {
            auto arrow = line.find("->");
            if (arrow == std::string::npos)
                throw IoError(where + ": expected 'sigma -> tau'");
            Face sigma = face_from_tokens(split_ws(line.substr(0, arrow)), 0, where);
            Face tau = face_from_tokens(split_ws(line.substr(arrow + 2)), 0, where);
            cf.cert.steps.push_back(CollapseStep{std::move(sigma), std::move(tau)});
        }
    }
    if (!have_header) throw IoError("certificate lacks @complex header");
    if (target_tops.empty()) throw IoError("certificate lacks @target block");
    cf.cert.target = SimplicialComplex::close_downward(target_tops);
    return cf;
}

std::string serialize_certificate(const CertificateFile& cf) {
    std::ostringstream out;
    out << "@complex " << cf.complex_ref << '\n';
    for (const auto& st : cf.cert.steps)
        out << face_to_string(st.sigma) << " -> " << face_to_string(st.tau) << '\n';
    out << "@target\n";
    for (const Face& f : cf.cert.target.maximal_faces()) out << face_to_string(f) << '\n';
    return out.str();
}

CertificateFile load_certificate_file(const std::string& path) {
    return parse_certificate_text(read_text_file(path));
}

void save_certificate_file(const std::string& path, const CertificateFile& cf) {
    write_text_file(path, serialize_certificate(cf));
}

MorseMatching parse_matching_text(const std::string& text) {
    MorseMatching m;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool in_critical = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        const std::string where = "line " + std::to_string(lineno);
        if (line == "@critical") {
            in_critical = true;
        } else if (in_critical) {
            m.critical.push_back(face_from_tokens(split_ws(line), 0, where));
        } else {
            auto arrow = line.find("->");
            if (arrow == std::string::npos) throw IoError(where + ": expected 'sigma -> tau'");
            Face sigma = face_from_tokens(split_ws(line.substr(0, arrow)), 0, where);
            Face tau = face_from_tokens(split_ws(line.substr(arrow + 2)), 0, where);
            m.pairs.emplace_back(std::move(sigma), std::move(tau));
        }
    }
    return m;
}

std::string serialize_matching(const MorseMatching& m) {
    std::ostringstream out;
    for (const auto& [s, t] : m.pairs)
        out << face_to_string(s) << " -> " << face_to_string(t) << '\n';
    out << "@critical\n";
    for (const Face& f : m.critical) out << face_to_string(f) << '\n';
    return out.str();
}

}  // namespace whc
