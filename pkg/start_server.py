#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Local Tamari Engine Server
"""

import uvicorn

from src.main import app

if __name__ == "__main__":
    print("Starting Tamari Engine Server...")
    print("Server will run at: http://127.0.0.1:9003")
    print("Available endpoints:")
    print("   • GET  /health - Health check")
    print("   • POST /api/v1/convert - Convert trees and paths between formats")
    print("   • POST /api/v1/count - Interval counts against the closed formula")
    print("   • POST /api/v1/poly - Tamari polynomial of a tree")
    print("   • POST /api/v1/interval - Views of an interval-poset")
    print("   • POST /api/v1/compose - Compose interval-posets")
    print("   • POST /api/v1/decompose - Unique decomposition")
    print("   • POST /api/v1/lattice - DOT cover graph")

    uvicorn.run(app, host="127.0.0.1", port=9003, log_level="info")
