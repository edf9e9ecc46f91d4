#include "galaxia/error.hpp"

namespace galaxia {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::parse: return "Parse";
    case Errc::validate: return "Validate";
    case Errc::cyclic: return "Cyclic";
    case Errc::not_nice: return "NotNice";
    case Errc::not_forest: return "NotForest";
    case Errc::bad_shape: return "BadShape";
    case Errc::bad_params: return "BadParams";
    case Errc::invalid_colouring: return "InvalidColouring";
    case Errc::infeasible: return "Infeasible";
    case Errc::bad_lists: return "BadLists";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::not_subcubic: return "NotSubcubic";
    case Errc::has_k4: return "HasK4";
    case Errc::degree_too_high: return "DegreeTooHigh";
    case Errc::has_digon: return "HasDigon";
    case Errc::above_cap: return "AboveCap";
    case Errc::too_large: return "TooLarge";
    case Errc::not_cubic: return "NotCubic";
    case Errc::size_overflow: return "SizeOverflow";
    case Errc::no_applicable_algorithm: return "NoApplicableAlgorithm";
    case Errc::internal_defect: return "InternalDefect";
  }
  return "Unknown";
}

}  // namespace galaxia
