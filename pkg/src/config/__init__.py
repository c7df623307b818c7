# Config module for lascoux_gz