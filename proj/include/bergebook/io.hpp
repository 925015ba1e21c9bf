#pragma once
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bergebook/detect.hpp"
#include "bergebook/hypergraph.hpp"
#include "bergebook/pipeline.hpp"

namespace bergebook {

inline constexpr const char* kToolName = "bergebook";
inline constexpr const char* kToolVersion = "0.1.0";

/// `.3hg` text format: `n m` header line, then m lines `a b c` (0-based);
/// `#` starts a comment. Throws ParseError / OutOfRange / Degenerate /
/// Duplicate on bad input.
Hypergraph read_3hg(std::istream& in);
Hypergraph load_3hg(const std::string& path);

/// Writes sorted canonical form; header_comments are emitted as `#` lines
/// before the `n m` line.
void write_3hg(std::ostream& out, const Hypergraph& h,
               const std::vector<std::string>& header_comments = {});
void save_3hg(const std::string& path, const Hypergraph& h,
              const std::vector<std::string>& header_comments = {});

// JSON shapes with fixed field order, byte-identical across runs.
nlohmann::ordered_json to_json(const Triple& t);
nlohmann::ordered_json to_json(const BookCertificate& c);
nlohmann::ordered_json to_json(const BergeTriangleCertificate& c);
nlohmann::ordered_json to_json(const Hypergraph& h);
nlohmann::ordered_json to_json(const PipelineReport& r);

}  // namespace bergebook
