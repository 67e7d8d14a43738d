#ifndef TRICOLOR_ERRORS_HPP
#define TRICOLOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tricolor {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// body geometry
struct NotConvex : Error { using Error::Error; };
struct CollinearVertices : Error { using Error::Error; };
struct TooFewSegments : Error { using Error::Error; };
struct IsParallelogram : Error { using Error::Error; };
struct DegenerateCone : Error { using Error::Error; };

// cone orders
struct NotComplete : Error { using Error::Error; };

// domination engine
struct LpInfeasible : Error { using Error::Error; };
struct SubsetTooSmall : Error { using Error::Error; };

// polychromatic coloring
struct NoColoringFound : Error { using Error::Error; };

// pipeline
struct DegenerateAnchors : Error { using Error::Error; };
struct ClassificationAmbiguous : Error { using Error::Error; };

// range oracle
struct DegeneratePerturbation : Error { using Error::Error; };

// generators
struct TooLarge : Error { using Error::Error; };
struct SizeOverflow : Error { using Error::Error; };

// io
struct IoError : Error { using Error::Error; };
struct BadInput : Error { using Error::Error; };

}  // namespace tricolor

#endif
