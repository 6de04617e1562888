import os

import uvicorn
from dotenv import load_dotenv

from src.api.api import app, get_settings
from src.app.logging import setup_logging

if __name__ == "__main__":
    load_dotenv()
    setup_logging(get_settings().log_level)
    uvicorn.run(
        app,
        host=os.getenv("CONVEXPOLY_HOST", "127.0.0.1"),
        port=int(os.getenv("CONVEXPOLY_PORT", "8000")),
        log_config=None,
    )
