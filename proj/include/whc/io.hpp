// Text formats: face-list complexes (with @label/@path), collapse
// certificates (with @complex header and @target footer), and Morse
// matchings (with @critical footer). All formats round-trip bit-exactly
// after one parse/serialize cycle.
#ifndef WHC_IO_HPP
#define WHC_IO_HPP

#include <iosfwd>
#include <string>

#include "whc/collapse.hpp"
#include "whc/core.hpp"
#include "whc/morse.hpp"

namespace whc {

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// ---- face-list format ----
//   one maximal face per line, whitespace-separated vertex ids
//   '#' starts a comment
//   '@label name v1 v2 ...' attaches a face label
//   '@path name a b, b c, ...' attaches an ordered edge-path label
LabeledComplex parse_complex_text(const std::string& text);
std::string serialize_complex(const LabeledComplex& lc);

LabeledComplex load_complex_file(const std::string& path);
void save_complex_file(const std::string& path, const LabeledComplex& lc);

// ---- certificate format ----
//   '@complex file' header naming the start complex
//   one step per line: 'sigma_vertices -> tau_vertices'
//   '@target' footer, then one maximal face of the target per line
struct CertificateFile {
    std::string complex_ref;  // file name of the start complex
    CollapseCertificate cert;
};

CertificateFile parse_certificate_text(const std::string& text);
std::string serialize_certificate(const CertificateFile& cf);

CertificateFile load_certificate_file(const std::string& path);
void save_certificate_file(const std::string& path, const CertificateFile& cf);

// ---- matching format ----
//   one 'sigma -> tau' pair per line, '@critical' block of faces
MorseMatching parse_matching_text(const std::string& text);
std::string serialize_matching(const MorseMatching& m);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace whc

#endif
