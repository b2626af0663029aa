#pragma once

#define ZRP_VERSION_MAJOR 1
#define ZRP_VERSION_MINOR 0
#define ZRP_VERSION_PATCH 0
#define ZRP_VERSION "1.0.0"
