#pragma once

#define ANTICON_VERSION "0.1.0"
