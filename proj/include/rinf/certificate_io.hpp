#ifndef RINF_CERTIFICATE_IO_HPP
#define RINF_CERTIFICATE_IO_HPP

#include <string>

#include "rinf/witness.hpp"

namespace rinf {

/// Canonical JSON document for a certificate. Top-level fields:
///   case, l, k, orbit, points, witnesses, invariants, psi_coeffs, version
/// All integers are serialized as decimal strings so consumers never lose
/// precision; witnesses are arrays of rows of decimal strings; psi_coeffs
/// lists coefficients by ascending power (empty when no symbolic psi).
/// Keys are emitted in sorted order, so the document is byte-deterministic.
/// Only integer-ring certificates serialize; throws std::invalid_argument
/// for other ring kinds.
std::string certificate_to_json(const SeparationCertificate& cert, int indent = 2);

/// Parses a certificate document. Structural problems (malformed JSON,
/// non-decimal strings, ragged witness rows) throw std::invalid_argument;
/// semantic checks are left to verify_certificate.
SeparationCertificate certificate_from_json(const std::string& text);

void write_certificate_file(const SeparationCertificate& cert, const std::string& path);
SeparationCertificate read_certificate_file(const std::string& path);

} // namespace rinf

#endif
