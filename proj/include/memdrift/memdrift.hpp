#pragma once

#include "memdrift/analytic.hpp"
#include "memdrift/device.hpp"
#include "memdrift/drive.hpp"
#include "memdrift/errors.hpp"
#include "memdrift/field.hpp"
#include "memdrift/hysteresis.hpp"
#include "memdrift/simulator.hpp"
#include "memdrift/window.hpp"
