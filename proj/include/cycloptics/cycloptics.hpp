#pragma once

// Umbrella header for the cycloptics library: variational curve geometry
// (cycloids, involutes, gravity descent) and elementary geometric optics
// (Snell refraction, Fermat certificates, wavefront propagation on the space
// of contact elements).

#include "cycloptics/contact.hpp"
#include "cycloptics/csv.hpp"
#include "cycloptics/curve.hpp"
#include "cycloptics/cycloid.hpp"
#include "cycloptics/cycloid_pair.hpp"
#include "cycloptics/descent.hpp"
#include "cycloptics/errors.hpp"
#include "cycloptics/numeric.hpp"
#include "cycloptics/optics.hpp"
#include "cycloptics/snell_layers.hpp"
#include "cycloptics/svg.hpp"
#include "cycloptics/vec2.hpp"
