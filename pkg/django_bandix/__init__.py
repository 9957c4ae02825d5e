__version__ = (0, 1, 0)
__author__ = "Victor Torre"
__contact__ = "web.ehooo@gmail.com"
__homepage__ = ""
__license__ = "http://www.gnu.org/licenses/old-licenses/gpl-2.0.html"
